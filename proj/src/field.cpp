#include "secant/field.hpp"

#include <stdexcept>

namespace secant {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimePower factor_prime_power(std::uint32_t q) noexcept {
    if (q < 2) return {};
    std::uint32_t p = q;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t k = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return {};
    return {p, k};
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * base) % m);
        base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % m);
        e >>= 1;
    }
    return r;
}

int legendre_mod(std::int64_t v, std::uint32_t p) noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    if (r == 0) return 0;
    return pow_mod(static_cast<std::uint64_t>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

namespace poly {

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

Poly mod(Poly a, const Poly& m, std::uint32_t p) {
    // m is monic
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm && !a.empty()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // all monic divisors of degree d
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace poly

Elem Field::add(Elem a, Elem b) const noexcept {
    if (k_ == 1) {
        const Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint32_t da = a % p_, db = b % p_;
        r += ((da + db) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const noexcept {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint32_t da = a % p_;
        r += ((p_ - da) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (k_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inverse_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

int Field::legendre(Elem x) const {
    if (k_ != 1 || p_ == 2) throw std::invalid_argument("Legendre requires odd prime field");
    if (!chi_.empty()) return chi_[x];
    return legendre_mod(x, p_);
}

std::uint32_t Field::lift(Elem x) const {
    if (k_ != 1) throw std::invalid_argument("order defined only on prime fields");
    return x;
}

Elem Field::poly_mul_slow(Elem a, Elem b) const {
    poly::Poly pa(k_), pb(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        pa[i] = a % p_;
        a /= p_;
        pb[i] = b % p_;
        b /= p_;
    }
    poly::Poly prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
    const poly::Poly r = poly::mod(prod, modulus_, p_);
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < r.size(); ++i) {
        out += r[i] * scale;
        scale *= p_;
    }
    return out;
}

Field make_field(std::uint32_t q) {
    const PrimePower pk = factor_prime_power(q);
    if (pk.p == 0) throw std::invalid_argument("not a prime power");
    if (q > Field::kMaxOrder) throw std::invalid_argument("field order too large");

    Field f;
    f.p_ = pk.p;
    f.k_ = pk.k;
    f.q_ = q;

    if (pk.k == 1) {
        f.modulus_ = {0, 1};
        f.inverse_.assign(q, 0);
        for (Elem a = 1; a < q; ++a)
            f.inverse_[a] = static_cast<Elem>(pow_mod(a, q - 2, q));
        if (q > 2 && q < Field::kLegendreTableLimit) {
            f.chi_.assign(q, -1);
            f.chi_[0] = 0;
            for (std::uint64_t x = 1; x < q; ++x) f.chi_[x * x % q] = 1;
        }
        if (q == 2) {
            f.primitive_ = 1;
        } else {
            // smallest g whose order is p-1
            std::vector<std::uint32_t> factors;
            std::uint32_t m = q - 1;
            for (std::uint32_t d = 2; d * d <= m; ++d) {
                if (m % d == 0) {
                    factors.push_back(d);
                    while (m % d == 0) m /= d;
                }
            }
            if (m > 1) factors.push_back(m);
            for (Elem g = 2; g < q; ++g) {
                bool ok = true;
                for (std::uint32_t r : factors)
                    if (pow_mod(g, (q - 1) / r, q) == 1) { ok = false; break; }
                if (ok) { f.primitive_ = g; break; }
            }
        }
        return f;
    }

    // Smallest monic irreducible of degree k, comparing c_0 first.
    const std::uint32_t p = pk.p, k = pk.k;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        poly::Poly cand(k + 1);
        std::uint64_t c = code;
        for (std::uint32_t i = k; i-- > 0;) {  // c_0 is the most significant digit
            cand[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        cand[k] = 1;
        if (poly::is_irreducible(cand, p)) {
            f.modulus_ = cand;
            break;
        }
    }

    // Scan for a primitive element, then tabulate powers.
    for (Elem g = 2; g < q; ++g) {
        Elem x = g;
        std::uint32_t order = 1;
        while (x != 1) {
            x = f.poly_mul_slow(x, g);
            ++order;
        }
        if (order == q - 1) {
            f.primitive_ = g;
            break;
        }
    }
    f.exp_.assign(2 * (q - 1), 0);
    f.log_.assign(q, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        f.exp_[i] = x;
        f.exp_[i + q - 1] = x;
        f.log_[x] = i;
        x = f.poly_mul_slow(x, f.primitive_);
    }
    f.inverse_.assign(q, 0);
    for (Elem a = 1; a < q; ++a) f.inverse_[a] = f.exp_[(q - 1 - f.log_[a]) % (q - 1)];
    return f;
}

}  // namespace secant
