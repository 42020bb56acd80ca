#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <compare>
#include <set>
#include <vector>

#include "cb/oracle.hpp"
#include "test_util.hpp"

using cb::member_after;
using cb::omega_pow;
using cb::Ordinal;
using cb::OrdinalSpace;

namespace {

const Ordinal w = Ordinal::omega();

// First-principles model of [0, w^alpha * p] for alpha <= 2: ordinals are
// triples (a, b, c) standing for w^2*a + w*b + c, ordered lexicographically.
// Derived sets are computed by neighborhood analysis alone: a point is kept
// iff it is a limit ordinal and every canonical left approximant leaves a
// witness of the set strictly between the approximant and the point.
struct Triple {
  std::uint64_t a = 0, b = 0, c = 0;
  auto operator<=>(const Triple&) const = default;

  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  bool is_limit() const { return c == 0 && !is_zero(); }

  Ordinal value() const {
    return omega_pow(Ordinal(2)) * Ordinal(a) + w * Ordinal(b) + Ordinal(c);
  }
};

constexpr std::uint64_t kGridWidth = 8;  // b, c range over [0, kGridWidth)
constexpr std::uint64_t kApprox = 6;     // approximants checked per limit

std::vector<Triple> space_grid(int alpha, std::uint64_t p) {
  Triple top = alpha == 0 ? Triple{0, 0, p} : alpha == 1 ? Triple{0, p, 0} : Triple{p, 0, 0};
  std::vector<Triple> grid;
  for (std::uint64_t a = 0; a <= (alpha == 2 ? p : 0); ++a) {
    for (std::uint64_t b = 0; b < kGridWidth; ++b) {
      for (std::uint64_t c = 0; c < kGridWidth; ++c) {
        Triple t{a, b, c};
        if (t <= top) grid.push_back(t);
      }
    }
  }
  if (!std::binary_search(grid.begin(), grid.end(), top)) grid.push_back(top);
  std::sort(grid.begin(), grid.end());
  return grid;
}

// Canonical strictly increasing approximants from the left: limits of the
// form w^2*a + w*b are approached through the c coordinate of block b-1,
// and w^2*a through the b coordinate of block a-1.
Triple approximant(const Triple& t, std::uint64_t k) {
  if (t.b > 0) return Triple{t.a, t.b - 1, k};
  return Triple{t.a - 1, k, 0};
}

std::set<Triple> derived_set(const std::vector<Triple>& grid, const std::set<Triple>& current) {
  std::set<Triple> out;
  for (const auto& t : grid) {
    if (!t.is_limit()) continue;
    bool limit_of_current = true;
    for (std::uint64_t k = 0; k < kApprox && limit_of_current; ++k) {
      Triple lo = approximant(t, k);
      bool witness = false;
      for (const auto& s : current) {
        if (lo < s && s < t) {
          witness = true;
          break;
        }
      }
      limit_of_current = witness;
    }
    if (limit_of_current) out.insert(t);
  }
  return out;
}

}  // namespace

TEST_CASE("closed form validated against the order-topology model") {
  for (int alpha = 0; alpha <= 2; ++alpha) {
    for (std::uint64_t p = 1; p <= 3; ++p) {
      OrdinalSpace space{Ordinal(std::uint64_t(alpha)), p};
      std::vector<Triple> grid = space_grid(alpha, p);
      std::set<Triple> current(grid.begin(), grid.end());
      for (std::uint64_t beta = 0; beta <= 3; ++beta) {
        for (const auto& t : grid) {
          CHECK(current.count(t) ==
                std::size_t(member_after(space, t.value(), Ordinal(beta))));
        }
        current = derived_set(grid, current);
      }
    }
  }
}

TEST_CASE("membership after derivatives") {
  OrdinalSpace omega_plus_one{Ordinal(1), 1};
  for (std::uint64_t n = 0; n <= 9; ++n) {
    CHECK_FALSE(member_after(omega_plus_one, Ordinal(n), Ordinal(1)));
    CHECK(member_after(omega_plus_one, Ordinal(n), Ordinal(0)));
  }
  CHECK(member_after(omega_plus_one, w, Ordinal(1)));

  OrdinalSpace big{Ordinal(2), 3};
  Ordinal w2 = omega_pow(Ordinal(2));
  CHECK(member_after(big, w2 * Ordinal(2), Ordinal(2)));
  CHECK_FALSE(member_after(big, w * Ordinal(5), Ordinal(2)));
  // No small xi reaches w*5 as w^2 * xi.
  for (std::uint64_t n = 1; n <= 40; ++n) {
    CHECK(w2 * Ordinal(n) != w * Ordinal(5));
  }
  CHECK_THROWS_AS(member_after(big, omega_pow(Ordinal(3)), Ordinal(0)), cb::OutOfRange);
}

TEST_CASE("survivors at beta = alpha are the p top multiples") {
  for (const auto& alpha : cbtest::alpha_grid()) {
    if (alpha.is_zero()) continue;
    for (std::uint64_t p = 1; p <= 4; ++p) {
      OrdinalSpace space{alpha, p};
      auto survivors = cb::survivors_upto(space, alpha, p + 5);
      REQUIRE(survivors.size() == p);
      for (std::uint64_t k = 1; k <= p; ++k) {
        CHECK(survivors[k - 1] == omega_pow(alpha) * Ordinal(k));
        CHECK(member_after(space, survivors[k - 1], alpha));
      }
    }
  }
}

TEST_CASE("survivor counts") {
  CHECK(cb::survivor_count(OrdinalSpace{Ordinal(2), 1}, Ordinal(2)) == 1);
  CHECK(cb::survivor_count(OrdinalSpace{Ordinal(2), 4}, Ordinal(2)) == 4);
  CHECK(cb::survivor_count(OrdinalSpace{Ordinal(2), 1}, Ordinal(1)) == std::nullopt);
  CHECK(cb::survivor_count(OrdinalSpace{Ordinal(2), 1}, Ordinal(3)) == 0);
  // The infinite case comes with an explicit injection k -> w*k.
  auto many = cb::survivors_upto(OrdinalSpace{Ordinal(2), 1}, Ordinal(1), 30);
  CHECK(many.size() == 30);
  for (std::size_t i = 0; i + 1 < many.size(); ++i) CHECK(many[i] < many[i + 1]);
  CHECK(std::set<Ordinal>(many.begin(), many.end()).size() == 30);
}

TEST_CASE("survival is antitone in the number of derivatives") {
  std::mt19937 rng(79);
  for (int i = 0; i < 200; ++i) {
    Ordinal alpha = cbtest::alpha_grid()[i % cbtest::alpha_grid().size()];
    OrdinalSpace space{alpha, 1 + std::uint64_t(i % 3)};
    Ordinal beta1 = cbtest::random_ordinal(rng, 2);
    Ordinal beta2 = cbtest::random_ordinal(rng, 2);
    if (beta2 < beta1) std::swap(beta1, beta2);
    Ordinal delta = cbtest::random_ordinal(rng, 2);
    if (delta > space.last()) continue;
    if (member_after(space, delta, beta2)) CHECK(member_after(space, delta, beta1));
  }
}
