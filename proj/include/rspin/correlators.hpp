#pragma once

#include "rspin/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

namespace rspin {

// tau_a(x_m): descendant order a >= 0, label m in 0..r-1.
struct Insertion {
    int a = 0;
    int m = 0;
    auto operator<=>(const Insertion&) const = default;
};

// Multiset of insertions stored in sorted order.
class CorrelatorKey {
  public:
    CorrelatorKey(int r, std::vector<Insertion> insertions);

    int r() const { return r_; }
    std::size_t size() const { return insertions_.size(); }
    const std::vector<Insertion>& insertions() const { return insertions_; }
    const Insertion& operator[](std::size_t i) const { return insertions_[i]; }

    CorrelatorKey without(std::size_t i) const;
    CorrelatorKey with_lowered(std::size_t i) const; // a_i -> a_i - 1

    auto operator<=>(const CorrelatorKey&) const = default;

  private:
    int r_;
    std::vector<Insertion> insertions_;
};

// sum a_i + sum m_i / r == n - 3 + c-hat
bool dimension_ok(const CorrelatorKey& key);
bool has_ramond(const CorrelatorKey& key);

// Genus-0 primary correlator <x_{m_1} ... x_{m_n}> from the prepotential.
Rational primary(int r, std::span<const int> m);

// Genus-0 descendant correlator via string equation and topological recursion.
Rational descendant(const CorrelatorKey& key);

// One explicit TRR step: insertion `leg` (a >= 1) with reference legs ref1, ref2.
Rational trr_expand(const CorrelatorKey& key, std::size_t leg, std::size_t ref1, std::size_t ref2);

// Right-hand sides of the string / dilaton equations.
Rational string_rhs(const CorrelatorKey& key);
Rational dilaton_rhs(const CorrelatorKey& key);
// Each side is checked against TRR (or the prepotential), never against the string step itself.
bool string_check(const CorrelatorKey& key);
bool dilaton_check(const CorrelatorKey& key);

// Memo table: values are written once and never change.
class CorrelatorTable {
  public:
    std::optional<Rational> find(const CorrelatorKey& key) const;
    // Returns the stored value (the first one written wins).
    Rational insert(const CorrelatorKey& key, const Rational& value);
    std::map<CorrelatorKey, Rational> snapshot() const;
    std::size_t size() const;

  private:
    mutable std::shared_mutex mutex_;
    std::map<CorrelatorKey, Rational> values_;
};

CorrelatorTable& correlator_table(int r);

// Every multiset of Neveu-Schwarz insertions with n in [3, max_n],
// sum a <= max_total_a and each a <= max_a, passing the dimension filter.
std::vector<CorrelatorKey> admissible_keys(int r, int max_n, int max_total_a, int max_a = -1);

inline constexpr int kMaxCorrelatorPoints = 12;

} // namespace rspin
