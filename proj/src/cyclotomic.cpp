#include "relclass/cyclotomic.hpp"

#include <sstream>

#include "relclass/errors.hpp"

namespace relclass {

namespace {

bool is_two_power(uint32_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

void check_half_degree(uint32_t n) {
    if (n < 2 || !is_two_power(n)) {
        throw MalformedInput("CycInt: half-degree must be a 2-power >= 2, got " + std::to_string(n));
    }
}

} // namespace

CycInt::CycInt(uint32_t half_degree) : n_(half_degree), coeffs_(half_degree) {
    check_half_degree(half_degree);
}

CycInt::CycInt(uint32_t half_degree, std::vector<mpz_class> coeffs) : n_(half_degree), coeffs_(std::move(coeffs)) {
    check_half_degree(half_degree);
    if (coeffs_.size() != n_) {
        throw MalformedInput("CycInt: coefficient vector must have length n");
    }
}

CycInt CycInt::from_integer(uint32_t half_degree, const mpz_class& c) {
    CycInt a(half_degree);
    a.coeffs_[0] = c;
    return a;
}

CycInt CycInt::root_of_unity(uint32_t half_degree, int64_t e) {
    check_half_degree(half_degree);
    uint32_t two_n = 2 * half_degree;
    uint32_t r = static_cast<uint32_t>(((e % two_n) + two_n) % two_n);
    CycInt a(half_degree);
    if (r < half_degree) {
        a.coeffs_[r] = 1;
    } else {
        a.coeffs_[r - half_degree] = -1;
    }
    return a;
}

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

CycInt CycInt::operator+(const CycInt& rhs) const {
    if (n_ != rhs.n_) throw DegreeMismatch("CycInt add: mixed half-degrees");
    CycInt out(n_);
    for (uint32_t i = 0; i < n_; ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return out;
}

CycInt CycInt::operator-(const CycInt& rhs) const {
    if (n_ != rhs.n_) throw DegreeMismatch("CycInt sub: mixed half-degrees");
    CycInt out(n_);
    for (uint32_t i = 0; i < n_; ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return out;
}

CycInt CycInt::operator-() const {
    CycInt out(n_);
    for (uint32_t i = 0; i < n_; ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

CycInt CycInt::operator*(const mpz_class& c) const {
    CycInt out(n_);
    for (uint32_t i = 0; i < n_; ++i) out.coeffs_[i] = coeffs_[i] * c;
    return out;
}

CycInt CycInt::operator*(const CycInt& rhs) const {
    if (n_ != rhs.n_) throw DegreeMismatch("CycInt mul: mixed half-degrees");
    // Schoolbook convolution, then fold x^{i+n} = -x^i. n <= 8 in every
    // planned scan, so nothing fancier is warranted.
    std::vector<mpz_class> full(2 * n_ - 1);
    for (uint32_t i = 0; i < n_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (uint32_t j = 0; j < n_; ++j) {
            full[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    CycInt out(n_);
    for (uint32_t i = 0; i < n_; ++i) out.coeffs_[i] = full[i];
    for (uint32_t i = n_; i < 2 * n_ - 1; ++i) out.coeffs_[i - n_] -= full[i];
    return out;
}

CycInt CycInt::conjugate(uint64_t k) const {
    uint64_t two_n = 2ull * n_;
    uint64_t kr = k % two_n;
    if (kr % 2 == 0) {
        throw InvalidAutomorphism("conjugate: k = " + std::to_string(k) + " is not coprime to " + std::to_string(two_n));
    }
    CycInt out(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        if (coeffs_[i] == 0) continue;
        uint64_t j = (i * kr) % two_n;
        if (j < n_) {
            out.coeffs_[j] += coeffs_[i];
        } else {
            out.coeffs_[j - n_] -= coeffs_[i];
        }
    }
    return out;
}

mpz_class CycInt::norm() const {
    CycInt prod = *this;
    for (uint64_t k = 3; k < 2ull * n_; k += 2) {
        prod = prod * conjugate(k);
    }
    for (uint32_t i = 1; i < n_; ++i) {
        if (prod.coeffs_[i] != 0) {
            throw InternalInconsistency("norm: conjugate product has nonzero coefficient at index " +
                                        std::to_string(i));
        }
    }
    return prod.coeffs_[0];
}

CycInt CycInt::exact_div(const mpz_class& d) const {
    if (d < 1) throw MalformedInput("exact_div: divisor must be positive");
    CycInt out(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t())) {
            throw NotDivisible("exact_div: coefficient " + std::to_string(i) + " (" + coeffs_[i].get_str() +
                                   ") not divisible by " + d.get_str(),
                               i);
        }
        mpz_divexact(out.coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
    }
    return out;
}

mpz_class CycInt::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (uint32_t i = 0; i < n_; ++i) {
        if (coeffs_[i] == 0) continue;
        mpz_class a = abs(coeffs_[i]);
        if (first) {
            if (coeffs_[i] < 0) os << "-";
            first = false;
        } else {
            os << (coeffs_[i] < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

CycRational::CycRational(CycInt numerator, mpz_class denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw MalformedInput("CycRational: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    normalize();
}

void CycRational::normalize() {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ = num_.exact_div(g);
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

CycRational CycRational::scaled(const mpz_class& c) const {
    return CycRational(num_ * c, den_);
}

const CycInt& CycRational::as_integral() const {
    if (den_ != 1) {
        throw NonIntegralResult("CycRational: value is not integral (denominator " + den_.get_str() + ")");
    }
    return num_;
}

std::string CycRational::to_string() const {
    if (den_ == 1) return num_.to_string();
    return "(" + num_.to_string() + ") / " + den_.get_str();
}

} // namespace relclass
