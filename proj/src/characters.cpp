#include "stieltjeskit/characters.hpp"

#include <algorithm>
#include <numeric>

namespace sk {

namespace {

long power_mod(long base, long exp, long mod) {
    long result = 1 % mod;
    long b = base % mod;
    while (exp > 0) {
        if (exp & 1) result = static_cast<long>((__int128)result * b % mod);
        b = static_cast<long>((__int128)b * b % mod);
        exp >>= 1;
    }
    return result;
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> factors;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

// smallest primitive root mod an odd prime p
long primitive_root_mod_p(long p) {
    long phi = p - 1;
    auto primes = prime_factors(phi);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long r : primes)
            if (power_mod(g, phi / r, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    fail(ErrorCode::DomainError, "no primitive root mod " + std::to_string(p));
}

}  // namespace

long euler_phi(long n) {
    long result = n;
    for (auto& [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

UnitGroup::UnitGroup(long modulus) : modulus_(modulus) {
    if (modulus < 1) fail(ErrorCode::DomainError, "modulus must be positive");
    for (auto& [p, e] : factorize(modulus)) {
        long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 1) continue;  // (Z/2)^* is trivial
            if (e == 2) {
                Component c{p, pe, 3, 2, std::vector<uint32_t>(pe, kNoLog)};
                c.dlog[1] = 0;
                c.dlog[3] = 1;
                components_.push_back(std::move(c));
                phi_ *= 2;
                exponent_ = std::lcm(exponent_, 2L);
                continue;
            }
            // 2^e, e >= 3: <-1> x <5>, orders 2 and 2^{e-2}
            long order5 = pe / 4;
            Component sign{p, pe, pe - 1, 2, std::vector<uint32_t>(pe, kNoLog)};
            Component five{p, pe, 5, order5, std::vector<uint32_t>(pe, kNoLog)};
            long x = 1;
            for (long j = 0; j < order5; ++j) {
                sign.dlog[x] = 0;
                five.dlog[x] = static_cast<uint32_t>(j);
                long y = pe - x;
                sign.dlog[y] = 1;
                five.dlog[y] = static_cast<uint32_t>(j);
                x = static_cast<long>((__int128)x * 5 % pe);
            }
            phi_ *= 2 * order5;
            exponent_ = std::lcm(exponent_, std::max(2L, order5));
            components_.push_back(std::move(sign));
            components_.push_back(std::move(five));
            continue;
        }
        long g = primitive_root_mod_p(p);
        long order = pe / p * (p - 1);
        if (e > 1 && power_mod(g, p - 1, p * p) == 1) g += p;
        Component c{p, pe, g, order, std::vector<uint32_t>(pe, kNoLog)};
        long x = 1;
        for (long j = 0; j < order; ++j) {
            c.dlog[x] = static_cast<uint32_t>(j);
            x = static_cast<long>((__int128)x * g % pe);
        }
        phi_ *= order;
        exponent_ = std::lcm(exponent_, order);
        components_.push_back(std::move(c));
    }
}

bool UnitGroup::is_unit(long a) const { return std::gcd(a, modulus_) == 1; }

std::vector<long> UnitGroup::log(long a) const {
    std::vector<long> exps;
    exps.reserve(components_.size());
    for (const auto& c : components_) {
        uint32_t x = c.dlog[a % c.prime_power];
        if (x == kNoLog) fail(ErrorCode::DomainError, "discrete log of a non-unit");
        exps.push_back(static_cast<long>(x));
    }
    return exps;
}

namespace {

// Conductor of the local piece on one generator: the 2-power components of a
// shared prime_power must be combined by the caller.
long odd_local_conductor(long p, long order, long exponent_value) {
    long o = order / std::gcd(order, exponent_value);
    if (o == 1) return 1;
    long t = 0;
    while (o % p == 0) {
        o /= p;
        ++t;
    }
    long f = p;
    for (long i = 0; i < t; ++i) f *= p;
    return f;  // p^{t+1}
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<long> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& comps = group_->components();
    if (exponents_.size() != comps.size())
        fail(ErrorCode::DomainError, "exponent vector size mismatch");
    for (size_t i = 0; i < comps.size(); ++i) {
        long d = comps[i].order;
        exponents_[i] = ((exponents_[i] % d) + d) % d;
        order_ = std::lcm(order_, d / std::gcd(d, exponents_[i]));
    }

    conductor_ = 1;
    for (size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        if (c.prime == 2) continue;
        conductor_ *= odd_local_conductor(c.prime, c.order, exponents_[i]);
    }
    // the 2-part: either a single mod-4 component or the {-1, 5} pair
    for (size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        if (c.prime != 2) continue;
        if (c.prime_power == 4) {
            if (exponents_[i] % 2 != 0) conductor_ *= 4;
            continue;
        }
        // sign component first, five component second (construction order)
        long sign_exp = exponents_[i];
        long five_order = comps[i + 1].order;
        long five_exp = exponents_[i + 1];
        long o5 = five_order / std::gcd(five_order, five_exp);
        if (o5 == 1) {
            if (sign_exp % 2 != 0) conductor_ *= 4;
        } else {
            conductor_ *= 4 * o5;
        }
        break;
    }

    if (group_->modulus() <= 2) {
        even_ = true;
    } else {
        auto rot = rotation(group_->modulus() - 1);  // chi(-1) is +1 or -1
        even_ = rot && rot->first == 0;
    }
}

long DirichletCharacter::index() const {
    long idx = 0;
    const auto& comps = group_->components();
    for (size_t i = 0; i < comps.size(); ++i) idx = idx * comps[i].order + exponents_[i];
    return idx;
}

std::optional<std::pair<long, long>> DirichletCharacter::rotation(long long a) const {
    long q = group_->modulus();
    long r = static_cast<long>(((a % q) + q) % q);
    if (q == 1) return std::make_pair(0L, 1L);
    if (std::gcd(r, q) != 1) return std::nullopt;
    const auto& comps = group_->components();
    long den = 1;
    for (const auto& c : comps) den = std::lcm(den, c.order);
    long num = 0;
    for (size_t i = 0; i < comps.size(); ++i) {
        long x = static_cast<long>(comps[i].dlog[r % comps[i].prime_power]);
        num = (num + exponents_[i] * x % comps[i].order * (den / comps[i].order)) % den;
    }
    long g = std::gcd(num, den);
    if (num == 0) return std::make_pair(0L, 1L);
    return std::make_pair(num / g, den / g);
}

BigComplex DirichletCharacter::value(long long a) const {
    auto rot = rotation(a);
    if (!rot) return {BigReal(0), BigReal(0)};
    return unit_rotation(rot->first, rot->second);
}

std::vector<DirichletCharacter> enumerate_characters(long q, long max_modulus) {
    if (q < 1) fail(ErrorCode::DomainError, "modulus must be positive");
    if (q > max_modulus)
        fail(ErrorCode::ResourceLimit,
             "modulus " + std::to_string(q) + " exceeds limit " + std::to_string(max_modulus));
    auto group = std::make_shared<const UnitGroup>(q);
    const auto& comps = group->components();
    std::vector<DirichletCharacter> chars;
    chars.reserve(group->phi());
    std::vector<long> exps(comps.size(), 0);
    while (true) {
        chars.emplace_back(group, exps);
        size_t i = comps.size();
        while (i > 0) {
            --i;
            if (++exps[i] < comps[i].order) break;
            exps[i] = 0;
            if (i == 0) return chars;
        }
        if (comps.empty()) return chars;
    }
}

DirichletCharacter character_by_index(long q, long index, long max_modulus) {
    if (q < 1) fail(ErrorCode::DomainError, "modulus must be positive");
    if (q > max_modulus)
        fail(ErrorCode::ResourceLimit,
             "modulus " + std::to_string(q) + " exceeds limit " + std::to_string(max_modulus));
    auto group = std::make_shared<const UnitGroup>(q);
    const auto& comps = group->components();
    if (index < 0 || index >= group->phi())
        fail(ErrorCode::DomainError, "character index out of range [0, phi(q))");
    std::vector<long> exps(comps.size(), 0);
    long rem = index;
    for (size_t i = comps.size(); i > 0; --i) {
        exps[i - 1] = rem % comps[i - 1].order;
        rem /= comps[i - 1].order;
    }
    return {group, exps};
}

DirichletCharacter inducing_character(const DirichletCharacter& chi) {
    long f = chi.conductor();
    long q = chi.modulus();
    for (auto& psi : enumerate_characters(f)) {
        bool match = true;
        for (long a = 1; a <= q && match; ++a) {
            if (std::gcd(a, q) != 1) continue;
            if (psi.rotation(a) != chi.rotation(a)) match = false;
        }
        if (match) return psi;
    }
    fail(ErrorCode::DomainError, "no inducing character found");
}

}  // namespace sk
