#include "rspin/state_space.hpp"

#include <string>

namespace rspin {

namespace {

void require_r(int r)
{
    if (r < 2)
        throw DomainError("r must be at least 2, got " + std::to_string(r));
}

int mod(int a, int r) { return ((a % r) + r) % r; }

void require_narrow_index(int r, int k)
{
    require_r(r);
    if (k == 0)
        throw BroadSectorError("broad sector J^0 carries no invariant state");
    if (k < 1 || k > r - 1)
        throw DomainError("sector index " + std::to_string(k) + " outside 1.." + std::to_string(r - 1));
}

} // namespace

SpinIndex::SpinIndex(int r) : r_(r) { require_r(r); }

Sector Sector::make(int r, int k)
{
    require_r(r);
    if (k < 0 || k > r - 1)
        throw DomainError("sector index " + std::to_string(k) + " outside 0.." + std::to_string(r - 1));
    Sector s;
    s.r = r;
    s.k = k;
    s.theta = frac(k, r);
    s.theta.canonicalize();
    s.narrow = k != 0;
    s.fixed_dim = s.narrow ? 0 : 1;
    return s;
}

RSpinLabel RSpinLabel::make(int r, int m)
{
    require_r(r);
    if (m < -1 || m > r - 1)
        throw DomainError("r-spin label " + std::to_string(m) + " outside -1.." + std::to_string(r - 1));
    int canonical = normalize_label(r, m);
    return {canonical, canonical == r - 1 ? LabelKind::Ramond : LabelKind::NeveuSchwarz};
}

const char* kind_name(LabelKind kind) { return kind == LabelKind::Ramond ? "R" : "NS"; }

StateSpace StateSpace::make(int r)
{
    require_r(r);
    StateSpace s;
    s.r = r;
    for (int k = 1; k < r; ++k)
        s.basis.push_back(Sector::make(r, k));
    s.charge = frac(1, r);
    s.central_charge = rspin::central_charge(r);
    return s;
}

int pairing(int r, int k, int l)
{
    require_narrow_index(r, k);
    require_narrow_index(r, l);
    return mod(k + l, r) == 0 ? 1 : 0;
}

Rational degree(int r, int k)
{
    require_narrow_index(r, k);
    Sector s = Sector::make(r, k);
    // N_gamma/2 + (Theta - q) with a single coordinate of charge 1/r.
    Rational d = frac(s.fixed_dim, 2) + s.theta - frac(1, r);
    d.canonicalize();
    return d;
}

Rational central_charge(int r)
{
    require_r(r);
    Rational c(r - 2, r);
    c.canonicalize();
    return c;
}

RSpinLabel to_rspin(int r, int k)
{
    require_r(r);
    if (k < 0 || k > r - 1)
        throw DomainError("sector index " + std::to_string(k) + " outside 0.." + std::to_string(r - 1));
    return RSpinLabel::make(r, mod(k - 1, r));
}

Sector from_rspin(int r, int m)
{
    RSpinLabel label = RSpinLabel::make(r, m);
    return Sector::make(r, mod(label.m + 1, r));
}

int rspin_pairing(int r, int mu, int nu)
{
    require_r(r);
    if (mu < 0 || mu > r - 2 || nu < 0 || nu > r - 2)
        throw DomainError("Neveu-Schwarz labels must lie in 0.." + std::to_string(r - 2));
    return mu + nu == r - 2 ? 1 : 0;
}

int normalize_label(int r, int m) { return m == -1 ? r - 1 : m; }

} // namespace rspin
