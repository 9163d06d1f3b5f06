#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "stieltjeskit/numerics.hpp"

namespace sk {

inline constexpr long kDefaultMaxModulus = 1000000;

/// (Z/q)^* decomposed into cyclic pieces with explicit generators via CRT.
/// For 2^k with k >= 3 the two pieces are generated by -1 and 5.  Discrete
/// logarithms are tabulated at construction, so evaluation never mutates.
class UnitGroup {
  public:
    struct Component {
        long prime;
        long prime_power;  // p^e this piece lives in
        long generator;    // given mod prime_power
        long order;
        std::vector<uint32_t> dlog;  // residue mod prime_power -> exponent
    };

    static constexpr uint32_t kNoLog = 0xffffffffu;

    explicit UnitGroup(long modulus);

    long modulus() const { return modulus_; }
    long phi() const { return phi_; }
    long exponent() const { return exponent_; }  // lcm of component orders
    const std::vector<Component>& components() const { return components_; }

    bool is_unit(long a) const;
    /// Component exponents of a unit a (CRT-split discrete logs).
    std::vector<long> log(long a) const;

  private:
    long modulus_;
    long phi_ = 1;
    long exponent_ = 1;
    std::vector<Component> components_;
};

/// A Dirichlet character mod q, represented by its exponent vector on the
/// unit-group generators.  Values are exact roots of unity rendered at the
/// current precision on demand.  Immutable and cheap to copy.
class DirichletCharacter {
  public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<long> exponents);

    long modulus() const { return group_->modulus(); }
    const std::vector<long>& exponents() const { return exponents_; }
    const UnitGroup& group() const { return *group_; }

    long conductor() const { return conductor_; }
    bool is_principal() const { return conductor_ == 1; }
    bool is_primitive() const { return conductor_ == modulus(); }
    bool is_even() const { return even_; }
    bool is_real() const { return order_ <= 2; }
    long order() const { return order_; }

    /// Lexicographic index of the exponent vector (first generator most
    /// significant); the principal character has index 0.
    long index() const;

    /// chi(a) as a reduced rotation t/d meaning e^{2 pi i t/d};
    /// nullopt when gcd(a, q) > 1.
    std::optional<std::pair<long, long>> rotation(long long a) const;

    /// chi(a) rendered at the current default precision (0 off the units).
    BigComplex value(long long a) const;

  private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<long> exponents_;
    long conductor_ = 1;
    long order_ = 1;
    bool even_ = true;
};

/// All phi(q) characters mod q in index order.  ResourceLimit when q exceeds
/// max_modulus.
std::vector<DirichletCharacter> enumerate_characters(long q, long max_modulus = kDefaultMaxModulus);

/// The character mod q with the given lexicographic index.
DirichletCharacter character_by_index(long q, long index, long max_modulus = kDefaultMaxModulus);

/// The primitive character mod conductor(chi) inducing chi.
DirichletCharacter inducing_character(const DirichletCharacter& chi);

long euler_phi(long n);

}  // namespace sk
