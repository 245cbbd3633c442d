#include "vfilt/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace vfilt {

int Monomial::degree() const {
  return std::accumulate(hpart.begin(), hpart.end(), 0);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const int abs_a = a.lpoint < 0 ? -a.lpoint : a.lpoint;
  const int abs_b = b.lpoint < 0 ? -b.lpoint : b.lpoint;
  if (auto c = abs_a <=> abs_b; c != 0) return c;
  if (auto c = (a.lpoint < 0) <=> (b.lpoint < 0); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Reverse-lexicographic: the lexicographically larger partition comes first.
  return std::lexicographical_compare_three_way(
      b.hpart.begin(), b.hpart.end(), a.hpart.begin(), a.hpart.end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = std::hash<int>{}(m.lpoint) * 0x9e3779b97f4a7c15ULL;
  for (int k : m.hpart) h = (h ^ static_cast<std::size_t>(k)) * 0x100000001b3ULL;
  return h;
}

AlgebraPreset AlgebraPreset::heisenberg() { return {Kind::heisenberg, 0}; }

AlgebraPreset AlgebraPreset::lattice(int gram) {
  if (gram == 0 || gram % 2 != 0) {
    throw std::invalid_argument("lattice gram value must be even and nonzero, got " +
                                std::to_string(gram));
  }
  return {Kind::lattice, gram};
}

AlgebraPreset AlgebraPreset::parse(std::string_view text) {
  if (text == "heisenberg") return heisenberg();
  constexpr std::string_view prefix = "lattice:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    int gram = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), gram);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return lattice(gram);
  }
  throw std::invalid_argument("unknown preset '" + std::string(text) +
                              "' (expected heisenberg or lattice:<even gram>)");
}

std::string AlgebraPreset::name() const {
  return kind_ == Kind::heisenberg ? "heisenberg" : "lattice:" + std::to_string(gram_);
}

int AlgebraPreset::sector_lowest_weight(int lpoint) const {
  return lpoint * lpoint * (gram_ / 2);
}

int AlgebraPreset::weight(const Monomial& m) const {
  return m.degree() + sector_lowest_weight(m.lpoint);
}

bool AlgebraPreset::admits(const Monomial& m) const {
  if (kind_ == Kind::heisenberg && m.lpoint != 0) return false;
  for (std::size_t i = 0; i < m.hpart.size(); ++i) {
    if (m.hpart[i] < 1) return false;
    if (i > 0 && m.hpart[i] > m.hpart[i - 1]) return false;
  }
  return true;
}

State::State(Monomial m, const Scalar& c) {
  if (sgn(c) != 0) terms_.emplace(std::move(m), c);
}

Scalar State::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void State::add_term(const Monomial& m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void State::axpy(const Scalar& alpha, const State& x) {
  if (sgn(alpha) == 0) return;
  for (const auto& [m, c] : x.terms_) add_term(m, alpha * c);
}

State& State::operator+=(const State& x) {
  for (const auto& [m, c] : x.terms_) add_term(m, c);
  return *this;
}

State& State::operator-=(const State& x) {
  for (const auto& [m, c] : x.terms_) add_term(m, -c);
  return *this;
}

State& State::operator*=(const Scalar& alpha) {
  if (sgn(alpha) == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= alpha;
  }
  return *this;
}

std::optional<int> homogeneous_weight(const AlgebraPreset& preset, const State& s) {
  std::optional<int> w;
  for (const auto& [m, c] : s.terms()) {
    const int mw = preset.weight(m);
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int k : m.hpart) out += "b_{-" + std::to_string(k) + "}";
  if (m.lpoint != 0) {
    out += "e^{" + std::to_string(m.lpoint) + "a}";
  } else if (m.hpart.empty()) {
    out = "1";
  }
  return out;
}

std::string to_string(const State& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*" + to_string(m);
  }
  return out;
}

}  // namespace vfilt
