#include "rspin/correlators.hpp"

#include "rspin/lg_frobenius.hpp"
#include "rspin/state_space.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace rspin {

CorrelatorKey::CorrelatorKey(int r, std::vector<Insertion> insertions) : r_(r), insertions_(std::move(insertions))
{
    if (r < 2)
        throw DomainError("r must be at least 2");
    for (auto& ins : insertions_) {
        if (ins.a < 0)
            throw DomainError("descendant order must be non-negative");
        ins.m = normalize_label(r, ins.m);
        if (ins.m < 0 || ins.m > r - 1)
            throw DomainError("insertion label out of range");
    }
    std::sort(insertions_.begin(), insertions_.end());
}

CorrelatorKey CorrelatorKey::without(std::size_t i) const
{
    auto ins = insertions_;
    ins.erase(ins.begin() + static_cast<std::ptrdiff_t>(i));
    return CorrelatorKey(r_, std::move(ins));
}

CorrelatorKey CorrelatorKey::with_lowered(std::size_t i) const
{
    auto ins = insertions_;
    --ins.at(i).a;
    return CorrelatorKey(r_, std::move(ins));
}

bool dimension_ok(const CorrelatorKey& key)
{
    const int r = key.r();
    const long n = static_cast<long>(key.size());
    // r * (sum a) + sum m == r (n - 3) + r - 2
    long lhs = 0;
    for (const auto& ins : key.insertions())
        lhs += static_cast<long>(r) * ins.a + ins.m;
    return lhs == r * (n - 3) + r - 2;
}

bool has_ramond(const CorrelatorKey& key)
{
    return std::any_of(key.insertions().begin(), key.insertions().end(),
                       [&](const Insertion& i) { return i.m == key.r() - 1; });
}

Rational primary(int r, std::span<const int> m)
{
    std::vector<Insertion> ins;
    for (int x : m)
        ins.push_back({0, x});
    CorrelatorKey key(r, std::move(ins));
    if (key.size() < 3)
        throw DomainError("genus-0 correlators need at least three insertions");
    if (has_ramond(key) || !dimension_ok(key))
        return 0;
    std::vector<int> labels;
    for (const auto& i : key.insertions())
        labels.push_back(i.m);
    return prepotential(r).correlator(labels);
}

namespace {

const Insertion kString{0, 0};
const Insertion kDilaton{1, 0};

std::size_t find_insertion(const CorrelatorKey& key, const Insertion& target)
{
    auto it = std::find(key.insertions().begin(), key.insertions().end(), target);
    return it == key.insertions().end() ? key.size() : static_cast<std::size_t>(it - key.insertions().begin());
}

// TRR on the first maximal leg, or the prepotential when no leg carries a descendant.
Rational reconstruct(const CorrelatorKey& key)
{
    const std::size_t n = key.size();
    if (has_ramond(key) || !dimension_ok(key))
        return 0;
    std::size_t leg = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (key[i].a > key[leg].a)
            leg = i;
    if (key[leg].a == 0) {
        std::vector<int> labels;
        for (const auto& i : key.insertions())
            labels.push_back(i.m);
        return prepotential(key.r()).correlator(labels);
    }
    std::vector<std::size_t> refs;
    for (std::size_t i = 0; i < n && refs.size() < 2; ++i)
        if (i != leg)
            refs.push_back(i);
    return trr_expand(key, leg, refs[0], refs[1]);
}

Rational compute(const CorrelatorKey& key)
{
    if (has_ramond(key) || !dimension_ok(key))
        return 0;
    if (key.size() >= 4 && find_insertion(key, kString) < key.size())
        return string_rhs(key);
    return reconstruct(key);
}

} // namespace

Rational descendant(const CorrelatorKey& key)
{
    if (key.size() < 3)
        throw DomainError("genus-0 correlators need at least three insertions");
    if (key.size() > static_cast<std::size_t>(kMaxCorrelatorPoints))
        throw ScaleLimitError("scale limit: at most " + std::to_string(kMaxCorrelatorPoints) + " insertions");
    auto& table = correlator_table(key.r());
    if (auto hit = table.find(key))
        return *hit;
    return table.insert(key, compute(key));
}

Rational trr_expand(const CorrelatorKey& key, std::size_t leg, std::size_t ref1, std::size_t ref2)
{
    const std::size_t n = key.size();
    if (leg >= n || ref1 >= n || ref2 >= n || leg == ref1 || leg == ref2 || ref1 == ref2)
        throw DomainError("TRR needs three distinct legs");
    if (key[leg].a < 1)
        throw DomainError("TRR leg must carry a descendant");
    const int r = key.r();

    std::vector<Insertion> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (i != leg && i != ref1 && i != ref2)
            rest.push_back(key[i]);

    Rational total = 0;
    const std::size_t k = rest.size();
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
        std::vector<Insertion> left{{key[leg].a - 1, key[leg].m}};
        std::vector<Insertion> right{key[ref1], key[ref2]};
        for (std::size_t i = 0; i < k; ++i)
            (mask & (1UL << i) ? left : right).push_back(rest[i]);
        for (int e = 0; e <= r - 2; ++e) {
            auto l = left;
            auto rr = right;
            l.push_back({0, e});
            rr.push_back({0, r - 2 - e});
            CorrelatorKey lk(r, std::move(l));
            if (!dimension_ok(lk))
                continue;
            Rational lv = descendant(lk);
            if (lv == 0)
                continue;
            total += lv * descendant(CorrelatorKey(r, std::move(rr)));
        }
    }
    return total;
}

Rational string_rhs(const CorrelatorKey& key)
{
    std::size_t s = find_insertion(key, kString);
    if (s == key.size())
        throw DomainError("string equation needs a tau_0(x_0) insertion");
    if (key.size() == 3) {
        const auto& x = key[(s + 1) % 3];
        const auto& y = key[(s + 2) % 3];
        if (x.a != 0 || y.a != 0 || x.m > key.r() - 2 || y.m > key.r() - 2)
            return 0;
        return rspin_pairing(key.r(), x.m, y.m);
    }
    CorrelatorKey rest = key.without(s);
    Rational total = 0;
    for (std::size_t j = 0; j < rest.size(); ++j)
        if (rest[j].a > 0)
            total += descendant(rest.with_lowered(j));
    return total;
}

Rational dilaton_rhs(const CorrelatorKey& key)
{
    std::size_t d = find_insertion(key, kDilaton);
    if (d == key.size())
        throw DomainError("dilaton equation needs a tau_1(x_0) insertion");
    if (key.size() < 4)
        return 0;
    CorrelatorKey rest = key.without(d);
    return Rational(static_cast<long>(rest.size()) - 2) * descendant(rest);
}

// Both sides avoid the string step at the top level, so neither check is circular.
bool string_check(const CorrelatorKey& key) { return reconstruct(key) == string_rhs(key); }

bool dilaton_check(const CorrelatorKey& key) { return reconstruct(key) == dilaton_rhs(key); }

std::optional<Rational> CorrelatorTable::find(const CorrelatorKey& key) const
{
    std::shared_lock lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end())
        return std::nullopt;
    return it->second;
}

Rational CorrelatorTable::insert(const CorrelatorKey& key, const Rational& value)
{
    std::unique_lock lock(mutex_);
    return values_.try_emplace(key, value).first->second;
}

std::map<CorrelatorKey, Rational> CorrelatorTable::snapshot() const
{
    std::shared_lock lock(mutex_);
    return values_;
}

std::size_t CorrelatorTable::size() const
{
    std::shared_lock lock(mutex_);
    return values_.size();
}

CorrelatorTable& correlator_table(int r)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CorrelatorTable>> tables;
    std::lock_guard lock(mutex);
    auto& slot = tables[r];
    if (!slot)
        slot = std::make_unique<CorrelatorTable>();
    return *slot;
}

std::vector<CorrelatorKey> admissible_keys(int r, int max_n, int max_total_a, int max_a)
{
    if (r < 2)
        throw DomainError("r must be at least 2");
    if (max_n > kMaxCorrelatorPoints)
        throw ScaleLimitError("scale limit: at most " + std::to_string(kMaxCorrelatorPoints) + " insertions");
    std::vector<Insertion> alphabet;
    const int top_a = max_a < 0 ? max_total_a : std::min(max_a, max_total_a);
    for (int a = 0; a <= top_a; ++a)
        for (int m = 0; m <= r - 2; ++m)
            alphabet.push_back({a, m});

    std::vector<CorrelatorKey> out;
    std::vector<Insertion> current;
    std::function<void(std::size_t, int)> extend = [&](std::size_t from, int budget) {
        if (current.size() >= 3) {
            CorrelatorKey key(r, current);
            if (dimension_ok(key))
                out.push_back(std::move(key));
        }
        if (static_cast<int>(current.size()) == max_n)
            return;
        for (std::size_t i = from; i < alphabet.size(); ++i) {
            if (alphabet[i].a > budget)
                continue;
            current.push_back(alphabet[i]);
            extend(i, budget - alphabet[i].a);
            current.pop_back();
        }
    };
    extend(0, max_total_a);
    std::sort(out.begin(), out.end(), [](const CorrelatorKey& x, const CorrelatorKey& y) {
        return std::make_pair(x.size(), x) < std::make_pair(y.size(), y);
    });
    return out;
}

} // namespace rspin
