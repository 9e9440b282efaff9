#include "qcs/symplectic.hpp"

#include <algorithm>

namespace qcs {

PauliVec pv_zero(u32 n) { return PauliVec{std::vector<u32>(n, 0), std::vector<u32>(n, 0)}; }

bool pv_is_zero(const PauliVec& v) {
    auto z = [](u32 c) { return c == 0; };
    return std::all_of(v.a.begin(), v.a.end(), z) && std::all_of(v.b.begin(), v.b.end(), z);
}

PauliVec pv_add(u32 p, const PauliVec& u, const PauliVec& v) {
    PauliVec z = u;
    for (u32 i = 0; i < z.n(); ++i) {
        z.a[i] = (z.a[i] + v.a[i]) % p;
        z.b[i] = (z.b[i] + v.b[i]) % p;
    }
    return z;
}

u32 joint_weight(const PauliVec& v) {
    u32 w = 0;
    for (u32 i = 0; i < v.n(); ++i)
        if (v.a[i] != 0 || v.b[i] != 0) ++w;
    return w;
}

Sigma::Sigma(u32 n, i64 m_raw) : n(n) {
    i64 mm = ((m_raw % n) + n) % n;
    if (static_cast<u64>(mm) * mm % n != 1)
        throw domain_error("Sigma: m^2 != 1 mod n");
    m = static_cast<u32>(mm);
}

std::vector<u32> Sigma::apply(const std::vector<u32>& x) const {
    std::vector<u32> y(n);
    for (u32 i = 0; i < n; ++i) y[i] = x[perm(i)];
    return y;
}

u32 sigma_form(u32 p, const PauliVec& u, const PauliVec& v, const Sigma& sigma) {
    u64 acc = 0;
    for (u32 i = 0; i < sigma.n; ++i) {
        acc += static_cast<u64>(u.a[i]) * v.b[sigma.perm(i)];
        acc += static_cast<u64>(u.b[i]) * (p - 1) % p * v.a[sigma.perm(i)] % p;
    }
    return static_cast<u32>(acc % p);
}

PauliVec apply_sigma_half(const PauliVec& v, const Sigma& sigma) {
    return PauliVec{v.a, sigma.apply(v.b)};
}

PauliVec simultaneous_shift(const PauliVec& v) {
    PauliVec z = v;
    std::rotate(z.a.rbegin(), z.a.rbegin() + 1, z.a.rend());
    std::rotate(z.b.rbegin(), z.b.rbegin() + 1, z.b.rend());
    return z;
}

PauliVec eta_multiply(const QuadExt& ext, const PauliVec& v) {
    const u32 p = ext.gf.p();
    PauliVec z = pv_zero(v.n());
    for (u32 i = 0; i < v.n(); ++i) {
        z.a[i] = static_cast<u32>(static_cast<u64>(ext.c0) * v.b[i] % p);
        z.b[i] = static_cast<u32>((v.a[i] + static_cast<u64>(ext.c1) * v.b[i]) % p);
    }
    return z;
}

std::vector<u32> Basis::flat(const PauliVec& v) const {
    std::vector<u32> x(2 * n_);
    std::copy(v.a.begin(), v.a.end(), x.begin());
    std::copy(v.b.begin(), v.b.end(), x.begin() + n_);
    return x;
}

PauliVec Basis::unflat(const std::vector<u32>& x) const {
    PauliVec v = pv_zero(n_);
    std::copy(x.begin(), x.begin() + n_, v.a.begin());
    std::copy(x.begin() + n_, x.end(), v.b.begin());
    return v;
}

int Basis::reduce(std::vector<u32>& x) const {
    auto scalar_inv = [this](u32 a) {
        u64 r = 1, b = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<u32>(r);
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        int piv = pivots_[r];
        if (x[piv] == 0) continue;
        std::vector<u32> row = flat(rows_[r]);
        u32 factor = static_cast<u32>(static_cast<u64>(x[piv]) * scalar_inv(row[piv]) % p_);
        for (u32 i = 0; i < 2 * n_; ++i)
            x[i] = static_cast<u32>((x[i] + static_cast<u64>(p_ - factor) * row[i]) % p_);
    }
    for (u32 i = 0; i < 2 * n_; ++i)
        if (x[i] != 0) return static_cast<int>(i);
    return -1;
}

bool Basis::insert(const PauliVec& v) {
    std::vector<u32> x = flat(v);
    int piv = reduce(x);
    if (piv < 0) return false;
    // normalize pivot to 1
    u64 inv = 1, b = x[piv], e = p_ - 2;
    while (e) {
        if (e & 1) inv = inv * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    for (auto& c : x) c = static_cast<u32>(c * inv % p_);
    rows_.push_back(unflat(x));
    pivots_.push_back(piv);
    return true;
}

bool Basis::contains(const PauliVec& v) const {
    std::vector<u32> x = flat(v);
    return reduce(x) < 0;
}

Basis span_of(u32 n, u32 p, const std::vector<PauliVec>& vecs) {
    Basis b(n, p);
    for (const auto& v : vecs) b.insert(v);
    return b;
}

bool is_sigma_isotropic(u32 p, const Basis& s, const Sigma& sigma) {
    const auto& rows = s.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (sigma_form(p, rows[i], rows[j], sigma) != 0) return false;
    return true;
}

Basis apply_sigma(const Basis& s, const Sigma& sigma) {
    Basis z(s.n(), s.p());
    for (const auto& r : s.rows()) z.insert(apply_sigma_half(r, sigma));
    return z;
}

Basis centralizer(u32 p, const Basis& s, const Sigma& sigma) {
    const u32 n = s.n();
    const u32 cols = 2 * n;
    // matrix of functionals: row per basis element of s, column per unit vector
    std::vector<std::vector<u32>> mat;
    for (const auto& r : s.rows()) {
        std::vector<u32> row(cols);
        for (u32 j = 0; j < cols; ++j) {
            PauliVec e = pv_zero(n);
            (j < n ? e.a[j] : e.b[j - n]) = 1;
            row[j] = sigma_form(p, r, e, sigma);
        }
        mat.push_back(std::move(row));
    }
    // kernel by Gaussian elimination with deterministic pivoting
    auto scalar_inv = [p](u32 a) {
        u64 r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<u32>(r);
    };
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (u32 col = 0; col < cols && rank < mat.size(); ++col) {
        std::size_t sel = rank;
        while (sel < mat.size() && mat[sel][col] == 0) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[rank], mat[sel]);
        u32 inv = scalar_inv(mat[rank][col]);
        for (auto& c : mat[rank]) c = static_cast<u32>(static_cast<u64>(c) * inv % p);
        for (std::size_t r = 0; r < mat.size(); ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            u32 f = mat[r][col];
            for (u32 j = 0; j < cols; ++j)
                mat[r][j] = static_cast<u32>((mat[r][j] + static_cast<u64>(p - f) * mat[rank][j]) % p);
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    Basis ker(n, p);
    for (u32 free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<u32> x(cols, 0);
        x[free_col] = 1;
        for (std::size_t r = 0; r < rank; ++r)
            x[pivot_col[r]] = (p - mat[r][free_col]) % p;
        PauliVec v = pv_zero(n);
        std::copy(x.begin(), x.begin() + n, v.a.begin());
        std::copy(x.begin() + n, x.end(), v.b.begin());
        ker.insert(v);
    }
    return ker;
}

Poly pv_half_to_poly(const Gf& fp, const std::vector<u32>& half) {
    return p_from_ints(fp, half);
}

bool polynomial_isotropy_check(u32 p, const PauliVec& u, const PauliVec& v, i64 m) {
    const u32 n = u.n();
    Gf fp = make_prime_field(p);
    Poly a = pv_half_to_poly(fp, u.a), b = pv_half_to_poly(fp, u.b);
    Poly c = pv_half_to_poly(fp, v.a), d = pv_half_to_poly(fp, v.b);
    Poly lhs = p_sub(fp, p_mulmod_xn1(fp, a, frobenius_substitute(fp, d, n, m), n),
                     p_mulmod_xn1(fp, b, frobenius_substitute(fp, c, n, m), n));
    return lhs.is_zero();
}

bool is_uniquely_cyclic(const Basis& s) {
    // no (0, b) with b != 0: equivalently reducing any (0, e_i) never lands in s
    // via: a vector (0,b) in s would survive as a row combination; check by
    // intersecting with the a = 0 subspace through rank comparison
    const u32 n = s.n(), p = s.p();
    // rank of the projection of s onto the a-half equals dim(s) iff no (0,b)
    Basis proj(n, p);
    u32 proj_dim = 0;
    for (const auto& r : s.rows()) {
        PauliVec v = pv_zero(n);
        v.a = r.a;
        if (proj.insert(v)) ++proj_dim;
    }
    return proj_dim == s.dim();
}

bool closed_under_shift(u32 p, const Basis& s) {
    (void)p;
    for (const auto& r : s.rows())
        if (!s.contains(simultaneous_shift(r))) return false;
    return true;
}

bool closed_under_eta(const QuadExt& ext, const Basis& s) {
    for (const auto& r : s.rows())
        if (!s.contains(eta_multiply(ext, r))) return false;
    return true;
}

}  // namespace qcs
