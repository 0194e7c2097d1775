#include "exanlab/hochschild.hpp"

namespace exanlab {

namespace {

// digits of a tensor index, leftmost factor most significant
std::vector<std::size_t> tensor_digits(std::size_t index, std::size_t n, int p) {
    std::vector<std::size_t> d(p);
    for (int i = p - 1; i >= 0; --i) {
        d[i] = index % n;
        index /= n;
    }
    return d;
}

std::size_t tensor_index(const std::vector<std::size_t>& digits, std::size_t n) {
    std::size_t t = 0;
    for (std::size_t d : digits) t = t * n + d;
    return t;
}

} // namespace

std::size_t cochain_cols(const Algebra& a, const Bimodule& im, int degree) {
    if (degree < 0 || degree > 3) throw InputError("cochain degree out of range [0,3]");
    std::size_t cols = 1;
    for (int i = 0; i < degree; ++i) {
        cols *= a.dim;
        if (im.dim != 0 && cols > kCochainSpaceGuard / std::max<std::size_t>(im.dim, 1))
            throw SizeGuardError("cochain space C^" + std::to_string(degree) +
                                 " exceeds the 10^6 entry guard");
    }
    if (im.dim * cols > kCochainSpaceGuard)
        throw SizeGuardError("cochain space C^" + std::to_string(degree) +
                             " exceeds the 10^6 entry guard");
    return cols;
}

Cochain zero_cochain(const Algebra& a, const Bimodule& im, int degree) {
    return {degree, Matrix(a.field, im.dim, cochain_cols(a, im, degree))};
}

Vector cochain_vec(const Cochain& c) {
    const std::size_t m = c.mat.rows(), t = c.mat.cols();
    Vector v(c.mat.field(), m * t);
    for (std::size_t col = 0; col < t; ++col)
        for (std::size_t r = 0; r < m; ++r) v[col * m + r] = c.mat.at(r, col);
    return v;
}

Cochain cochain_from_vec(const Algebra& a, const Bimodule& im, int degree, const Vector& v) {
    Cochain c = zero_cochain(a, im, degree);
    if (v.size() != im.dim * c.mat.cols()) throw InputError("cochain vector has wrong length");
    for (std::size_t col = 0; col < c.mat.cols(); ++col)
        for (std::size_t r = 0; r < im.dim; ++r) c.mat.at(r, col) = v[col * im.dim + r];
    return c;
}

Cochain differential(const Algebra& a, const Bimodule& im, const Cochain& c) {
    if (c.degree < 0 || c.degree > 2)
        throw InputError("differential defined for degrees 0..2 only");
    if (c.mat.rows() != im.dim || c.mat.cols() != cochain_cols(a, im, c.degree))
        throw InputError("cochain matrix shape does not match its degree");

    const int p = c.degree;
    const std::size_t n = a.dim;
    Cochain out = zero_cochain(a, im, p + 1);

    for (std::size_t col = 0; col < out.mat.cols(); ++col) {
        const auto args = tensor_digits(col, n, p + 1);
        Vector value(a.field, im.dim);

        // a_1 . f(a_2 x ... x a_{p+1})
        {
            std::vector<std::size_t> rest(args.begin() + 1, args.end());
            value += im.left[args[0]] * c.mat.column(tensor_index(rest, n));
        }
        // middle terms: contract a_i a_{i+1}
        bool negative = true; // (-1)^i starting at i = 1
        for (int i = 0; i + 1 <= p; ++i) {
            const Vector& prod = a.basis_product(args[i], args[i + 1]);
            Vector term(a.field, im.dim);
            for (std::size_t k = 0; k < n; ++k) {
                if (prod[k].is_zero()) continue;
                std::vector<std::size_t> contracted;
                contracted.reserve(p);
                for (int s = 0; s < i; ++s) contracted.push_back(args[s]);
                contracted.push_back(k);
                for (int s = i + 2; s <= p; ++s) contracted.push_back(args[s]);
                term += c.mat.column(tensor_index(contracted, n)).scaled(prod[k]);
            }
            value = negative ? value - term : value + term;
            negative = !negative;
        }
        // (-1)^{p+1} f(a_1 x ... x a_p) . a_{p+1}
        {
            std::vector<std::size_t> rest(args.begin(), args.end() - 1);
            const Vector term = im.right[args[p]] * c.mat.column(tensor_index(rest, n));
            value = (p % 2 == 0) ? value - term : value + term;
        }
        out.mat.set_column(col, value);
    }
    return out;
}

Matrix differential_matrix(const Algebra& a, const Bimodule& im, int p) {
    const std::size_t domain = im.dim * cochain_cols(a, im, p);
    const std::size_t codomain = im.dim * cochain_cols(a, im, p + 1);
    Matrix d(a.field, codomain, domain);
    for (std::size_t j = 0; j < domain; ++j) {
        Vector e(a.field, domain);
        e[j] = Scalar::one(a.field);
        const Cochain img = differential(a, im, cochain_from_vec(a, im, p, e));
        d.set_column(j, cochain_vec(img));
    }
    return d;
}

Cohomology cohomology(const Algebra& a, const Bimodule& im, int p) {
    if (p < 0 || p > 2) throw InputError("cohomology implemented for degrees 0..2");

    const Matrix dp = differential_matrix(a, im, p);
    const std::vector<Vector> kernel = kernel_basis(dp);

    std::vector<Vector> image;
    if (p > 0) {
        const Matrix dprev = differential_matrix(a, im, p - 1);
        image = column_space_basis(dprev);
    }

    const QuotientBasis q = quotient_basis(kernel, image);
    Cohomology h;
    h.kernel_dim = kernel.size();
    h.image_dim = image.size();
    h.dim = q.dim;
    for (const Vector& v : q.representatives)
        h.representatives.push_back(cochain_from_vec(a, im, p, v));
    return h;
}

} // namespace exanlab
