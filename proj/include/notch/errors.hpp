#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace notch {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string field;
    double value;
    std::string allowed;
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(std::vector<Violation> v);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

class DegenerateBasis : public Error {
public:
    DegenerateBasis(const std::string& member, double p)
        : Error("basis member " + member + " vanishes identically at p = " + std::to_string(p)), member(member) {}
    std::string member;
};

class EmptyNullSpace : public Error {
public:
    explicit EmptyNullSpace(double ratio)
        : Error("no singular value below tolerance (sigma_min/sigma_max = " + std::to_string(ratio) + ")"), ratio(ratio) {}
    double ratio;
};

class NoRootFound : public Error {
public:
    using Error::Error;
};

class DivergentEnergy : public Error {
public:
    explicit DivergentEnergy(double r_exp)
        : Error("energy density term r^" + std::to_string(r_exp) + " is not integrable at the tip"), r_exp(r_exp) {}
    double r_exp;
};

class QuadratureDisagreement : public Error {
public:
    QuadratureDisagreement(double exact, double quad)
        : Error("quadrature " + std::to_string(quad) + " disagrees with antiderivative " + std::to_string(exact)),
          exact(exact), quad(quad) {}
    double exact, quad;
};

class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(std::size_t index, std::size_t size)
        : Error("amplitude index " + std::to_string(index) + " out of range (nullity " + std::to_string(size) + ")") {}
};

}  // namespace notch
