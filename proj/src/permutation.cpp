#include "ctrz/permutation.hpp"

#include <cctype>
#include <numeric>

#include "ctrz/error.hpp"

namespace ctrz {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto image : images) {
    if (image >= images.size() || seen[image])
      throw InputError("image array is not a bijection");
    seen[image] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(degree());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = i;
  return inv;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t result = 1;
  for (std::uint32_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (auto i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree())
    throw InputError("cannot multiply permutations of different degree");
  Permutation result(lhs.degree());
  for (std::size_t i = 0; i < lhs.degree(); ++i)
    result.images_[i] = rhs.images_[lhs.images_[i]];
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array
  std::size_t h = 1469598103934665603ull;
  for (auto image : p.images()) {
    h ^= image;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  Permutation parse() {
    Permutation result(degree_);
    skip_space();
    while (pos_ < text_.size()) {
      expect('(');
      auto cycle = parse_cycle();
      result = result * cycle;
      skip_space();
    }
    return result;
  }

 private:
  Permutation parse_cycle() {
    std::vector<std::uint32_t> points;
    std::vector<bool> used(degree_, false);
    skip_space();
    if (peek() == ')') {
      ++pos_;
      return Permutation(degree_);
    }
    while (true) {
      auto point = parse_point();
      if (used[point - 1])
        throw InputError("point " + std::to_string(point) + " repeated within a cycle");
      used[point - 1] = true;
      points.push_back(static_cast<std::uint32_t>(point - 1));
      skip_space();
      char c = peek();
      ++pos_;
      if (c == ')') break;
      if (c != ',') fail(c == '\0' ? "unbalanced parentheses" : "expected ',' or ')'");
    }
    std::vector<std::uint32_t> images(degree_);
    std::iota(images.begin(), images.end(), 0u);
    for (std::size_t i = 0; i < points.size(); ++i)
      images[points[i]] = points[(i + 1) % points.size()];
    return Permutation::from_images(std::move(images));
  }

  std::size_t parse_point() {
    skip_space();
    std::size_t start = pos_;
    unsigned long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > degree_) value = degree_ + 1;  // saturate, reported below
      ++pos_;
    }
    if (pos_ == start) fail(pos_ >= text_.size() ? "unbalanced parentheses" : "expected a point");
    if (value < 1 || value > degree_)
      throw InputError("point " + std::string(text_.substr(start, pos_ - start)) +
                       " outside 1.." + std::to_string(degree_));
    return static_cast<std::size_t>(value);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(peek() == ')' ? "unbalanced parentheses" : std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cycle notation: " + what + " at offset " + std::to_string(pos_) +
                     " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw InputError("degree must be positive");
  return CycleParser(text, degree).parse();
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += '(';
    for (auto i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      if (i != start) out += ',';
      out += std::to_string(i + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t fixed_point_count(const Permutation& p) {
  std::size_t count = 0;
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    if (p(i) == i) ++count;
  return count;
}

}  // namespace ctrz
