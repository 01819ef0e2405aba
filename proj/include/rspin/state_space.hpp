#pragma once

#include "rspin/rational.hpp"

#include <compare>
#include <vector>

namespace rspin {

// The integer r > 1 labelling the A_{r-1} singularity / r-spin theory.
class SpinIndex {
  public:
    explicit SpinIndex(int r);
    int value() const { return r_; }
    operator int() const { return r_; }

  private:
    int r_;
};

class BroadSectorError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Group element J^k of mu_r, J = exp(2 pi i / r), acting on the A_{r-1} state space.
struct Sector {
    int r = 2;
    int k = 0;
    Rational theta;
    bool narrow = false;
    int fixed_dim = 1;

    static Sector make(int r, int k);
    auto operator<=>(const Sector&) const = default;
};

enum class LabelKind { NeveuSchwarz, Ramond };

struct RSpinLabel {
    int m = 0;
    LabelKind kind = LabelKind::NeveuSchwarz;

    // m = -1 is accepted and normalised to r - 1.
    static RSpinLabel make(int r, int m);
    bool operator==(const RSpinLabel&) const = default;
};

const char* kind_name(LabelKind kind);

struct StateSpace {
    int r = 2;
    std::vector<Sector> basis; // narrow sectors k = 1..r-1
    Rational charge;           // q = 1/r
    Rational central_charge;   // c-hat = 1 - 2q = (r-2)/r

    static StateSpace make(int r);
};

// <e_{J^k}, e_{J^l}> on the narrow basis.
int pairing(int r, int k, int l);

// deg e_{J^k} = N_gamma/2 + iota_gamma = (k-1)/r; throws BroadSectorError for k = 0.
Rational degree(int r, int k);

Rational central_charge(int r);

RSpinLabel to_rspin(int r, int k);
Sector from_rspin(int r, int m);

// eta(x_mu, x_nu) on the Neveu-Schwarz labels 0..r-2.
int rspin_pairing(int r, int mu, int nu);

// Labels in 0..r-1 with the Ramond value stored as r-1.
int normalize_label(int r, int m);

} // namespace rspin
