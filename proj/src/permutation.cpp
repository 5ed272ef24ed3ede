#include "engelgraph/permutation.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace engelgraph {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw std::invalid_argument("permutation degree must be positive");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) {
    throw std::invalid_argument("permutation degree must be positive");
  }
  if (degree > 0xFFFF) {
    throw std::invalid_argument("permutation degree exceeds 65535");
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  auto result = identity(degree);
  auto& img = result.images_;
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cycle notation '" + std::string(text) + "': " + why);
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      skip_space();
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      if (pos == start) fail("expected a point");
      if (value < 1 || value > degree) fail("point " + std::to_string(value) + " out of range");
      if (used[value - 1]) fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);
      skip_space();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    if (pos >= text.size()) fail("unterminated cycle");
    ++pos;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      img[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    }
    skip_space();
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_cycles() const { return cycles_of(images_); }

std::string cycles_of(std::span<const Point> images) {
  std::string out;
  std::vector<bool> done(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (done[i] || images[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = images[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("degree mismatch in compose");
  }
  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b(a(static_cast<Point>(i)));
  return Permutation(std::move(img));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("degree mismatch in commutator");
  }
  return a.inverse() * b.inverse() * a * b;
}

std::uint64_t order(const Permutation& a) {
  std::uint64_t result = 1;
  std::vector<bool> done(a.degree(), false);
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (done[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !done[j]; j = a(static_cast<Point>(j))) {
      done[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

}  // namespace engelgraph
