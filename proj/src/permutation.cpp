#include "treefpp/permutation.hpp"

#include <algorithm>
#include <cctype>

#include "treefpp/errors.hpp"

namespace treefpp {

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  const int d = degree();
  if (d < 1 || d > kMaxDegree)
    throw parse_error("permutation degree out of range [1," + std::to_string(kMaxDegree) + "]");
  std::vector<bool> seen(d, false);
  for (auto v : img_) {
    if (v >= d || seen[v]) throw parse_error("image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<std::uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(inv));
}

int Permutation::fixed_point_count() const {
  int n = 0;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] == i) ++n;
  return n;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] == i) out.push_back(i);
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  std::vector<std::uint8_t> img(a.degree());
  for (int x = 0; x < a.degree(); ++x)
    img[x] = static_cast<std::uint8_t>(a.apply(b.apply(x)));
  return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& g, const Permutation& p) {
  // (g p g^-1)(g(x)) = g(p(x))
  std::vector<std::uint8_t> img(g.degree());
  for (int x = 0; x < g.degree(); ++x)
    img[g.apply(x)] = static_cast<std::uint8_t>(g.apply(p.apply(x)));
  return Permutation(std::move(img));
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  int take_point(int degree) {
    skip_ws();
    std::size_t start = i;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > kMaxDegree) break;
      ++i;
    }
    if (i == start) throw parse_error("expected a point", i);
    if (v < 1 || v > degree) throw parse_error("point out of range 1.." + std::to_string(degree), start);
    return static_cast<int>(v - 1);
  }
};

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<std::uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
  std::vector<bool> used(degree, false);

  Cursor c{text};
  while (!c.done()) {
    if (c.take() != '(') throw parse_error("expected '('", c.i - 1);
    std::vector<int> cycle;
    if (c.done()) throw parse_error("unterminated cycle", c.i);
    if (c.peek() != ')') {
      cycle.push_back(c.take_point(degree));
      while (!c.done() && c.peek() == ',') {
        c.take();
        cycle.push_back(c.take_point(degree));
      }
    }
    if (c.done() || c.take() != ')') throw parse_error("expected ')'", c.i);
    for (int pt : cycle) {
      if (used[pt]) throw parse_error("point " + std::to_string(pt + 1) + " repeated");
      used[pt] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
  }
  return Permutation(std::move(img));
}

Permutation parse_one_line(const std::string& text, int degree) {
  Cursor c{text};
  c.take();  // '['
  std::vector<std::uint8_t> img;
  if (c.done()) throw parse_error("unterminated image list", c.i);
  if (c.peek() != ']') {
    img.push_back(static_cast<std::uint8_t>(c.take_point(degree)));
    while (!c.done() && c.peek() == ',') {
      c.take();
      img.push_back(static_cast<std::uint8_t>(c.take_point(degree)));
    }
  }
  if (c.done() || c.take() != ']') throw parse_error("expected ']'", c.i);
  if (!c.done()) throw parse_error("trailing characters after image list", c.i);
  if (static_cast<int>(img.size()) != degree)
    throw parse_error("image list has " + std::to_string(img.size()) + " entries, expected " +
                      std::to_string(degree));
  std::vector<bool> seen(degree, false);
  for (auto v : img) {
    if (seen[v]) throw parse_error("point " + std::to_string(v + 1) + " repeated");
    seen[v] = true;
  }
  return Permutation(std::move(img));
}

}  // namespace

Permutation parse_permutation(const std::string& text, int degree) {
  if (degree < 2 || degree > kMaxDegree)
    throw parse_error("degree out of range [2," + std::to_string(kMaxDegree) + "]");
  Cursor c{text};
  if (c.done()) return Permutation::identity(degree);  // empty cycle text
  return c.peek() == '[' ? parse_one_line(text, degree) : parse_cycles(text, degree);
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p.apply(start) == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(x + 1);
      seen[x] = true;
      x = p.apply(x);
      first = false;
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace treefpp
