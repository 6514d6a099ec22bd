#include "gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ffgroup {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial helpers over F_p on raw residue vectors, low-degree-first.
// Only used while constructing a field (modulus search, table building); the
// public polynomial module works over any FieldCtx.
using PP = std::vector<std::uint64_t>;

void pp_trim(PP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PP pp_mulmod(const PP& a, const PP& b, const PP& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce mod the monic modulus
    const std::size_t m = mod.size() - 1;  // degree
    for (std::size_t i = r.size(); i-- > m;) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < m; ++j)
            r[i - m + j] = (r[i - m + j] + c * (p - mod[j] % p)) % p;
    }
    r.resize(m);
    pp_trim(r);
    return r;
}

PP pp_powmod(PP base, Bigint e, const PP& mod, std::uint64_t p) {
    PP r{1};
    while (e > 0) {
        if ((e & 1) != 0) r = pp_mulmod(r, base, mod, p);
        base = pp_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

PP pp_sub(PP a, const PP& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    pp_trim(a);
    return a;
}

PP pp_rem(PP a, const PP& b, std::uint64_t p) {
    // b must be nonzero; result deg < deg b
    std::uint64_t lead_inv = 1;
    {
        // inverse of b's leading coefficient mod p by Fermat
        std::uint64_t l = b.back() % p, e = p - 2, r = 1;
        while (e) {
            if (e & 1) r = r * l % p;
            l = l * l % p;
            e >>= 1;
        }
        lead_inv = r;
    }
    while (a.size() >= b.size() && !a.empty()) {
        std::uint64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
        pp_trim(a);
    }
    return a;
}

PP pp_gcd(PP a, PP b, std::uint64_t p) {
    while (!b.empty()) {
        PP r = pp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool pp_is_irreducible(const PP& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    const PP x{0, 1};
    // x^{p^n} == x mod f
    PP t = pp_powmod(x, bigint_pow(p, static_cast<unsigned>(n)), f, p);
    if (pp_sub(t, x, p) != PP{}) return false;
    // gcd(x^{p^{n/r}} - x, f) == 1 for each prime r | n
    std::size_t m = n;
    for (std::size_t r = 2; r * r <= m; ++r) {
        if (m % r) continue;
        while (m % r == 0) m /= r;
        PP u = pp_powmod(x, bigint_pow(p, static_cast<unsigned>(n / r)), f, p);
        if (pp_gcd(pp_sub(u, x, p), f, p).size() > 1) return false;
    }
    if (m > 1) {
        PP u = pp_powmod(x, bigint_pow(p, static_cast<unsigned>(n / m)), f, p);
        if (pp_gcd(pp_sub(u, x, p), f, p).size() > 1) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

}  // namespace

FieldPtr Field::make(std::uint64_t p, unsigned k, std::uint64_t point_budget) {
    if (!is_prime_u64(p))
        fail(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p) + " is not prime");
    if (k < 1) fail(Errc::InvalidArgument, "extension degree k must be >= 1");

    // q = p^k with overflow guard; fields are table-backed, so cap the order.
    constexpr std::uint64_t kMaxFieldOrder = 1u << 26;
    Bigint qb = bigint_pow(p, k);
    if (qb > point_budget)
        fail(Errc::BudgetExceeded,
             "field order " + qb.str() + " exceeds point budget " + std::to_string(point_budget));
    if (qb > kMaxFieldOrder)
        fail(Errc::InvalidArgument, "field order " + qb.str() + " too large to tabulate");
    const std::uint64_t q = qb.convert_to<std::uint64_t>();

    static std::mutex cache_mutex;
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->k_ = k;
    f->q_ = q;

    if (k > 1) {
        // Canonical modulus: first irreducible monic of degree k over F_p when the
        // lower coefficients are read as an ascending base-p integer.
        PP cand(k + 1, 0);
        cand[k] = 1;
        bool found = false;
        for (std::uint64_t code = 0; code < q; ++code) {
            std::uint64_t c = code;
            for (unsigned i = 0; i < k; ++i) {
                cand[i] = c % p;
                c /= p;
            }
            if (pp_is_irreducible(cand, p)) {
                found = true;
                break;
            }
        }
        if (!found) fail(Errc::InvalidArgument, "no irreducible modulus found");  // unreachable
        f->modulus_.assign(cand.begin(), cand.end());
    }

    f->build_tables();
    cache.emplace(std::make_pair(p, k), f);
    return f;
}

void Field::build_tables() {
    const std::uint64_t p = p_, q = q_;

    neg_.resize(q);
    if (k_ == 1) {
        for (std::uint64_t a = 0; a < q; ++a) neg_[a] = static_cast<Elem>((p - a) % p);
    } else {
        for (std::uint64_t a = 0; a < q; ++a) {
            std::uint64_t code = a, out = 0, scale = 1;
            for (unsigned i = 0; i < k_; ++i) {
                out += (p - code % p) % p * scale;
                scale *= p;
                code /= p;
            }
            neg_[a] = static_cast<Elem>(out);
        }
    }

    // Raw product on codes, used only until exp/log tables exist.
    PP mod(modulus_.begin(), modulus_.end());
    auto raw_mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
        if (k_ == 1) return a * b % p;
        PP va, vb;
        for (unsigned i = 0; i < k_; ++i) {
            va.push_back(a % p);
            a /= p;
            vb.push_back(b % p);
            b /= p;
        }
        pp_trim(va);
        pp_trim(vb);
        PP r = pp_mulmod(va, vb, mod, p);
        std::uint64_t out = 0;
        for (std::size_t i = r.size(); i-- > 0;) out = out * p + r[i];
        return out;
    };

    // Scan codes upward for the first unit of full order; its power table is
    // the exp table.
    std::vector<Elem> pows;
    pows.reserve(q - 1);
    for (std::uint64_t g = 1; g < q; ++g) {
        pows.clear();
        std::uint64_t x = 1;
        do {
            pows.push_back(static_cast<Elem>(x));
            x = raw_mul(x, g);
        } while (x != 1 && pows.size() < q);
        if (pows.size() == q - 1) {
            gen_ = static_cast<Elem>(g);
            break;
        }
    }

    exp_.resize(2 * (q - 1));
    log_.assign(q, 0);
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        exp_[i] = pows[i];
        exp_[i + (q - 1)] = pows[i];
        log_[pows[i]] = static_cast<Elem>(i);
    }

    if (k_ > 1 && q <= 1024) {
        add_.resize(q * q);
        for (std::uint64_t a = 0; a < q; ++a) {
            std::uint64_t ca = a;
            PP va;
            for (unsigned i = 0; i < k_; ++i) {
                va.push_back(ca % p);
                ca /= p;
            }
            for (std::uint64_t b = 0; b < q; ++b) {
                std::uint64_t cb = b, out = 0, scale = 1;
                for (unsigned i = 0; i < k_; ++i) {
                    out += (va[i] + cb % p) % p * scale;
                    scale *= p;
                    cb /= p;
                }
                add_[a * q + b] = static_cast<Elem>(out);
            }
        }
    }

    unit_factors_ = factor_u64(q - 1);
}

Elem Field::add(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>((std::uint64_t(a) + b) % p_);
    if (!add_.empty()) return add_[std::uint64_t(a) * q_ + b];
    std::uint64_t ca = a, cb = b, out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += (ca % p_ + cb % p_) % p_ * scale;
        scale *= p_;
        ca /= p_;
        cb /= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::pow_u(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t m = q_ - 1;
    std::uint64_t idx = static_cast<std::uint64_t>(log_[a]) % m * (e % m) % m;
    return exp_[idx];
}

Elem Field::pow(Elem a, const Bigint& e) const {
    if (e < 0) fail(Errc::InvalidArgument, "negative exponent");
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t m = q_ - 1;
    Bigint r = e % m;
    return pow_u(a, r.convert_to<std::uint64_t>());
}

Elem Field::frobenius(Elem a, std::uint64_t subfield_order) const {
    std::uint64_t s = subfield_order;
    unsigned j = 0;
    while (s > 1 && s % p_ == 0) {
        s /= p_;
        ++j;
    }
    if (s != 1 || j == 0 || k_ % j != 0)
        fail(Errc::InvalidSubfield,
             "subfield order " + std::to_string(subfield_order) + " is not p^j with j | k");
    return pow_u(a, subfield_order);
}

std::uint64_t Field::multiplicative_order(Elem a) const {
    if (a == 0) fail(Errc::ZeroElement, "order of zero");
    std::uint64_t m = q_ - 1;
    for (const auto& [r, e] : unit_factors_) {
        for (unsigned i = 0; i < e; ++i) {
            if (m % r == 0 && pow_u(a, m / r) == 1)
                m /= r;
            else
                break;
        }
    }
    return m;
}

std::vector<Elem> Field::decompose(Elem a) const {
    std::vector<Elem> out(k_);
    std::uint64_t c = a;
    for (unsigned i = 0; i < k_; ++i) {
        out[i] = static_cast<Elem>(c % p_);
        c /= p_;
    }
    return out;
}

Elem Field::compose(const std::vector<Elem>& digits) const {
    std::uint64_t out = 0;
    for (std::size_t i = digits.size(); i-- > 0;) out = out * p_ + digits[i] % p_;
    return static_cast<Elem>(out);
}

std::string Field::descriptor() const {
    if (k_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(k_);
}

std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
    if (q < 2) fail(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned k = 0;
    std::uint64_t m = q;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) fail(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    return {p, k};
}

FieldPtr make_field_q(std::uint64_t q, std::uint64_t point_budget) {
    auto [p, k] = split_prime_power(q);
    return Field::make(p, k, point_budget);
}

}  // namespace ffgroup
