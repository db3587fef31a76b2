#include "nilcommute/multipoly.hpp"

namespace nilcommute {

MultiPoly MultiPoly::constant(const FieldSpec& f, std::size_t nvars, const Scalar& c) {
    MultiPoly p(f, nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const FieldSpec& f, std::size_t nvars, std::size_t idx) {
    if (idx >= nvars) throw DimensionMismatch("variable index out of range");
    MultiPoly p(f, nvars);
    Exponents e(nvars, 0);
    e[idx] = 1;
    p.add_term(e, Scalar::one(f));
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != nvars_) throw DimensionMismatch("exponent vector length mismatch");
    if (!(c.field() == field_)) throw FieldMismatch("coefficient field mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomials in different variable counts");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, co] : terms_) {
        Scalar prod = co * c;
        if (!prod.is_zero()) r.terms_.emplace(e, prod);
    }
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(field_, nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= nvars_) throw DimensionMismatch("variable index out of range");
    MultiPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents de = e;
        de[var] -= 1;
        r.add_term(de, c * Scalar::of_int(field_, static_cast<long>(e[var])));
    }
    return r;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("evaluation point length mismatch");
    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) term *= point[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

Matrix MultiPoly::eval_matrices(const std::vector<Matrix>& args) const {
    if (args.size() != nvars_) throw DimensionMismatch("argument count mismatch");
    if (args.empty()) throw DimensionMismatch("matrix evaluation needs at least one variable");
    const std::size_t n = args.front().rows();
    for (const auto& a : args)
        if (!a.is_square() || a.rows() != n) throw DimensionMismatch("arguments must be square, same size");
    // cache powers per variable up to the max exponent used
    std::vector<std::vector<Matrix>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(Matrix::identity(field_, n));
    Matrix acc(field_, n, n);
    for (const auto& [e, c] : terms_) {
        Matrix term = Matrix::identity(field_, n).scaled(c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * args[i]);
            if (e[i] > 0) term = term * powers[i][e[i]];
        }
        acc = acc + term;
    }
    return acc;
}

Scalar MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.to_string();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            out += "*x" + std::to_string(i);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

JacobianResult poly_eval_jacobian(const std::vector<MultiPoly>& polys,
                                  const std::vector<Scalar>& point) {
    if (polys.empty()) throw DimensionMismatch("no polynomials given");
    const FieldSpec& f = polys.front().field();
    const std::size_t nv = polys.front().nvars();
    for (const auto& p : polys) {
        if (!(p.field() == f)) throw FieldMismatch("polynomials over different fields");
        if (p.nvars() != nv) throw DimensionMismatch("polynomials in different variable counts");
    }
    JacobianResult res{{}, Matrix(f, polys.size(), nv)};
    res.values.reserve(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        res.values.push_back(polys[i].eval(point));
        for (std::size_t j = 0; j < nv; ++j)
            res.jacobian(i, j) = polys[i].derivative(j).eval(point);
    }
    return res;
}

}  // namespace nilcommute
