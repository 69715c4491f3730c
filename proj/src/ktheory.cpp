#include "graphalg/ktheory.hpp"

#include <algorithm>
#include <numeric>

#include "graphalg/errors.hpp"

namespace graphalg {

IntMatrix presentation_map(const Graph& g) {
    auto regular = g.regular_vertices();
    size_t n = g.vertex_count(), r = regular.size();
    IntMatrix N(n, r);
    for (size_t j = 0; j < r; ++j) {
        uint32_t v = regular[j];
        for (uint32_t e : g.out_edges(v)) N.at(g.edge(e).dst, j) += BigInt(1);
        N.at(v, j) -= BigInt(1);
    }
    return N;
}

namespace {

K0Data k0_of_matrix(IntMatrix N, bool with_unit) {
    Cokernel ck(N);
    K0Data k;
    k.invariant_factors = ck.factors();
    k.free_rank = ck.free_rank();
    k.presentation_matrix = std::move(N);
    if (with_unit) {
        std::vector<BigInt> ones(k.presentation_matrix.rows(), BigInt(1));
        auto c = ck.reduce(ones);
        k.unit_class = UnitClass{std::move(c.torsion), std::move(c.free_part)};
    }
    return k;
}

}  // namespace

K0Data k0(const Graph& g) { return k0_of_matrix(presentation_map(g), true); }

K0Data k0(const StabilizedGraph& s) { return k0_of_matrix(presentation_map(s.base), false); }

K1Data k1(const Graph& g) {
    IntMatrix N = presentation_map(g);
    size_t rho = smith_normal_form(N).rank;
    K1Data d;
    d.top_free_rank = N.cols() - rho;
    d.algebraic_free_rank = d.top_free_rank;
    d.algebraic_divisible_rank = N.rows() - rho;
    return d;
}

K1Data k1(const StabilizedGraph& s) { return k1(s.base); }

DetSign det_sign(const Graph& g) {
    if (!g.sinks().empty()) return DetSign{DetSignValue::undefined_has_sinks, std::nullopt};
    IntMatrix d = IntMatrix::identity(g.vertex_count()) - g.vertex_matrix().transpose();
    BigInt det = determinant(d);
    DetSignValue v = det.sign() < 0   ? DetSignValue::negative
                     : det.sign() > 0 ? DetSignValue::positive
                                      : DetSignValue::zero;
    return DetSign{v, std::move(det)};
}

UnitClass reduce_in_k0(const K0Data& k, const std::vector<BigInt>& x) {
    Cokernel ck(k.presentation_matrix);
    auto c = ck.reduce(x);
    return UnitClass{std::move(c.torsion), std::move(c.free_part)};
}

namespace {

constexpr long long kTorsionOrderCap = 10000;
constexpr long long kCandidateCap = 10000000;

std::vector<long long> factors_as_int(const std::vector<BigInt>& factors) {
    std::vector<long long> out;
    long long order = 1;
    for (const auto& d : factors) {
        if (!d.fits_int64()) throw CapacityError("torsion group too large for orbit enumeration");
        long long v = d.to_int64();
        out.push_back(v);
        if (order > kTorsionOrderCap / v)
            throw CapacityError("torsion group too large for orbit enumeration");
        order *= v;
    }
    return out;
}

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// An endomorphism matrix defines an automorphism of T iff for every prime p
// dividing |T| the induced map on T/pT is invertible.
bool is_automorphism(const std::vector<std::vector<long long>>& a,
                     const std::vector<long long>& d,
                     const std::vector<long long>& primes) {
    size_t k = d.size();
    for (long long p : primes) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < k; ++i)
            if (d[i] % p == 0) idx.push_back(i);
        size_t m = idx.size();
        std::vector<std::vector<long long>> b(m, std::vector<long long>(m));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) b[i][j] = ((a[idx[i]][idx[j]] % p) + p) % p;
        // Gaussian elimination mod p
        size_t rank = 0;
        for (size_t col = 0; col < m && rank < m; ++col) {
            size_t piv = rank;
            while (piv < m && b[piv][col] == 0) ++piv;
            if (piv == m) continue;
            std::swap(b[piv], b[rank]);
            long long inv = 1, base = b[rank][col] % p, e = p - 2;  // Fermat
            while (e) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            for (size_t j = 0; j < m; ++j) b[rank][j] = b[rank][j] * inv % p;
            for (size_t i = 0; i < m; ++i) {
                if (i == rank || b[i][col] == 0) continue;
                long long f = b[i][col];
                for (size_t j = 0; j < m; ++j)
                    b[i][j] = ((b[i][j] - f * b[rank][j]) % p + p) % p;
            }
            ++rank;
        }
        if (rank != m) return false;
    }
    return true;
}

}  // namespace

std::vector<std::vector<std::vector<long long>>> torsion_automorphisms(
    const std::vector<long long>& d) {
    size_t k = d.size();
    if (k == 0) return {{}};
    long long order = 1;
    for (long long v : d) {
        if (order > kTorsionOrderCap / v)
            throw CapacityError("torsion group too large for orbit enumeration");
        order *= v;
    }

    // entry (i, j): image of generator j has coefficient a_ij on generator i;
    // well-definedness forces a_ij to be a multiple of d_i / gcd(d_i, d_j)
    struct Slot {
        size_t i, j;
        long long step, count;
    };
    std::vector<Slot> slots;
    long long total = 1;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            long long step = d[i] / std::gcd(d[i], d[j]);
            long long count = d[i] / step;
            if (total > kCandidateCap / count)
                throw CapacityError("automorphism candidate space too large");
            total *= count;
            slots.push_back({i, j, step, count});
        }

    auto primes = prime_divisors(order);
    std::vector<std::vector<std::vector<long long>>> autos;
    std::vector<std::vector<long long>> a(k, std::vector<long long>(k, 0));
    std::vector<long long> counter(slots.size(), 0);
    for (;;) {
        for (size_t s = 0; s < slots.size(); ++s)
            a[slots[s].i][slots[s].j] = counter[s] * slots[s].step;
        if (is_automorphism(a, d, primes)) autos.push_back(a);
        size_t s = 0;
        while (s < slots.size() && ++counter[s] == slots[s].count) counter[s++] = 0;
        if (s == slots.size()) break;
    }
    return autos;
}

PairDescriptor pair_canonical_form(const K0Data& k) {
    if (!k.unit_class) throw std::invalid_argument("pair_canonical_form: unit class absent");
    PairDescriptor d;
    d.invariant_factors = k.invariant_factors;
    d.free_rank = k.free_rank;

    BigInt g(0);
    for (const auto& c : k.unit_class->free_part) g = BigInt::gcd(g, c);
    d.unit_free_gcd = g;

    auto dl = factors_as_int(k.invariant_factors);
    size_t kk = dl.size();
    // orbit computed in T/gT; coordinate i lives mod gcd(g, d_i)
    std::vector<long long> mod(kk);
    long long gl = 0;
    if (!g.is_zero()) {
        if (!g.fits_int64()) {
            // the quotient moduli are gcd(g, d_i) <= d_i, computable via BigInt
            gl = -1;
        } else {
            gl = g.to_int64();
        }
    }
    for (size_t i = 0; i < kk; ++i) {
        if (g.is_zero())
            mod[i] = dl[i];
        else if (gl >= 0)
            mod[i] = std::gcd(gl, dl[i]);
        else
            mod[i] = BigInt::gcd(g, BigInt(dl[i])).to_int64();
    }

    std::vector<long long> t(kk);
    for (size_t i = 0; i < kk; ++i) t[i] = k.unit_class->torsion[i].to_int64();

    auto autos = torsion_automorphisms(dl);
    std::vector<long long> best;
    for (const auto& a : autos) {
        std::vector<long long> img(kk);
        for (size_t i = 0; i < kk; ++i) {
            long long acc = 0;
            for (size_t j = 0; j < kk; ++j)
                acc = (acc + a[i][j] % dl[i] * (t[j] % dl[i])) % dl[i];
            img[i] = mod[i] == 0 ? acc : ((acc % mod[i]) + mod[i]) % mod[i];
        }
        if (best.empty() && kk > 0) {
            best = img;
        } else if (kk > 0 && img < best) {
            best = img;
        }
    }
    if (kk == 0) best.clear();
    d.torsion_orbit_rep.reserve(best.size());
    for (long long v : best) d.torsion_orbit_rep.push_back(BigInt(v));
    return d;
}

bool group_iso(const K0Data& a, const K0Data& b) {
    return a.invariant_factors == b.invariant_factors && a.free_rank == b.free_rank;
}

bool pair_iso(const K0Data& a, const K0Data& b) {
    if (!a.unit_class || !b.unit_class)
        throw std::invalid_argument("pair_iso: unit class absent");
    if (!group_iso(a, b)) return false;
    return pair_canonical_form(a) == pair_canonical_form(b);
}

}  // namespace graphalg
