// Copyright 2026 The vqsim developers.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqsim/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace vqsim {

namespace {

constexpr double kCoefficientFloor = 1e-14;

const Complex kImag(0.0, 1.0);

// Product table for single-qubit Paulis: a*b = phase * c.
// Index by (a, b); phase is one of {1, i, -i}.
struct PauliProduct {
    Pauli result;
    Complex phase;
};

PauliProduct single_product(Pauli a, Pauli b) {
    if (a == Pauli::I)
        return {b, 1.0};
    if (b == Pauli::I)
        return {a, 1.0};
    if (a == b)
        return {Pauli::I, 1.0};
    // Cyclic: XY=iZ, YZ=iX, ZX=iY; reversed order picks up a minus sign.
    auto ia = static_cast<int>(a), ib = static_cast<int>(b);
    // Remaining label is the one different from both a and b.
    auto ic = 6 - ia - ib; // X=1, Y=2, Z=3
    bool cyclic = (ib - ia + 3) % 3 == 1;
    return {static_cast<Pauli>(ic), cyclic ? kImag : -kImag};
}

} // namespace

char pauli_char(Pauli p) {
    switch (p) {
    case Pauli::I:
        return 'I';
    case Pauli::X:
        return 'X';
    case Pauli::Y:
        return 'Y';
    default:
        return 'Z';
    }
}

PauliString::PauliString(Complex coefficient, std::vector<Pauli> factors)
    : coefficient_(coefficient), factors_(std::move(factors)) {
    if (factors_.empty())
        throw std::invalid_argument("PauliString: empty factor list");
    if (factors_.size() > 64)
        throw std::invalid_argument("PauliString: more than 64 qubits");
    int y_count = 0;
    for (std::size_t q = 0; q < factors_.size(); ++q) {
        switch (factors_[q]) {
        case Pauli::X:
            flip_mask_ |= std::uint64_t{1} << q;
            break;
        case Pauli::Y:
            flip_mask_ |= std::uint64_t{1} << q;
            phase_mask_ |= std::uint64_t{1} << q;
            ++y_count;
            break;
        case Pauli::Z:
            phase_mask_ |= std::uint64_t{1} << q;
            break;
        case Pauli::I:
            break;
        }
    }
    static const Complex i_pow[4] = {1.0, kImag, -1.0, -kImag};
    kernel_coefficient_ = coefficient_ * i_pow[y_count % 4];
}

PauliString PauliString::identity(std::size_t qubit_count, Complex c) {
    return {c, std::vector<Pauli>(qubit_count, Pauli::I)};
}

PauliString PauliString::single(Pauli p, std::size_t qubit,
                                std::size_t qubit_count, Complex c) {
    if (qubit >= qubit_count)
        throw std::invalid_argument("PauliString: qubit index out of range");
    std::vector<Pauli> factors(qubit_count, Pauli::I);
    factors[qubit] = p;
    return {c, std::move(factors)};
}

bool PauliString::is_identity() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](Pauli p) { return p == Pauli::I; });
}

PauliString PauliString::adjoint() const {
    return {std::conj(coefficient_), factors_};
}

std::string PauliString::to_string() const {
    std::ostringstream os;
    os << std::setprecision(17) << "(" << coefficient_.real()
       << (coefficient_.imag() < 0 ? "-" : "+") << std::abs(coefficient_.imag())
       << "i)*";
    bool any = false;
    for (std::size_t q = 0; q < factors_.size(); ++q) {
        if (factors_[q] == Pauli::I)
            continue;
        if (any)
            os << " ";
        os << pauli_char(factors_[q]) << q;
        any = true;
    }
    if (!any)
        os << "I";
    return os.str();
}

PauliString operator*(const PauliString &a, const PauliString &b) {
    if (a.qubit_count() != b.qubit_count())
        throw std::invalid_argument("PauliString product: qubit count mismatch");
    Complex c = a.coefficient_ * b.coefficient_;
    std::vector<Pauli> factors(a.qubit_count());
    for (std::size_t q = 0; q < factors.size(); ++q) {
        auto p = single_product(a.factors_[q], b.factors_[q]);
        factors[q] = p.result;
        c *= p.phase;
    }
    return {c, std::move(factors)};
}

OperatorSum::OperatorSum(std::size_t qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count == 0)
        throw std::invalid_argument("OperatorSum: zero qubits");
}

OperatorSum::OperatorSum(std::size_t qubit_count,
                         std::vector<PauliString> terms)
    : qubit_count_(qubit_count), terms_(std::move(terms)) {
    for (const auto &t : terms_)
        if (t.qubit_count() != qubit_count_)
            throw std::invalid_argument("OperatorSum: term qubit count mismatch");
    canonicalize();
}

OperatorSum::OperatorSum(const PauliString &term)
    : qubit_count_(term.qubit_count()), terms_{term} {
    canonicalize();
}

void OperatorSum::canonicalize() {
    std::map<std::vector<Pauli>, Complex> merged;
    for (const auto &t : terms_)
        merged[t.factors()] += t.coefficient();
    terms_.clear();
    for (auto &[factors, c] : merged)
        if (std::abs(c) >= kCoefficientFloor)
            terms_.emplace_back(c, factors);
}

bool OperatorSum::is_identity(double tol) const {
    if (terms_.size() != 1)
        return false;
    return terms_[0].is_identity() &&
           std::abs(terms_[0].coefficient() - 1.0) <= tol;
}

OperatorSum OperatorSum::adjoint() const {
    std::vector<PauliString> terms;
    terms.reserve(terms_.size());
    for (const auto &t : terms_)
        terms.push_back(t.adjoint());
    return {qubit_count_, std::move(terms)};
}

bool OperatorSum::is_hermitian(double tol) const {
    for (const auto &t : terms_)
        if (std::abs(t.coefficient().imag()) > tol)
            return false;
    return true;
}

std::string OperatorSum::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            os << " + ";
        os << terms_[i].to_string();
    }
    return os.str();
}

OperatorSum operator+(const OperatorSum &a, const OperatorSum &b) {
    if (a.qubit_count_ != b.qubit_count_)
        throw std::invalid_argument("OperatorSum sum: qubit count mismatch");
    std::vector<PauliString> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return {a.qubit_count_, std::move(terms)};
}

OperatorSum operator-(const OperatorSum &a, const OperatorSum &b) {
    return a + (Complex(-1.0) * b);
}

OperatorSum operator*(const OperatorSum &a, const OperatorSum &b) {
    if (a.qubit_count_ != b.qubit_count_)
        throw std::invalid_argument("OperatorSum product: qubit count mismatch");
    std::vector<PauliString> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &ta : a.terms_)
        for (const auto &tb : b.terms_)
            terms.push_back(ta * tb);
    return {a.qubit_count_, std::move(terms)};
}

OperatorSum operator*(Complex c, const OperatorSum &a) {
    std::vector<PauliString> terms;
    terms.reserve(a.terms_.size());
    for (const auto &t : a.terms_)
        terms.push_back(t.scaled(c));
    return {a.qubit_count_, std::move(terms)};
}

namespace {

// One summand of the operator literal grammar: [coef '*']? factor*.
PauliString parse_term(const std::string &term, std::size_t qubit_count) {
    std::string body = term;
    Complex coefficient = 1.0;
    auto star = term.find('*');
    std::string coef_text;
    if (star != std::string::npos) {
        coef_text = term.substr(0, star);
        body = term.substr(star + 1);
    } else {
        // No '*': the whole term is either a bare coefficient or bare factors.
        bool has_letter = std::any_of(term.begin(), term.end(), [](char ch) {
            return std::strchr("xyzXYZ", ch) != nullptr;
        });
        if (!has_letter && term.find_first_of("0123456789.") != std::string::npos) {
            coef_text = term;
            body.clear();
        }
    }
    if (!coef_text.empty()) {
        // Trim whitespace; accept "0.5", "0.5i", "i", "-i", "(a+bi)".
        std::string s;
        for (char ch : coef_text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                s += ch;
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
            s = s.substr(1, s.size() - 2);
            if (s.empty() || s.back() != 'i')
                throw std::invalid_argument(
                    "operator literal: bad coefficient '" + coef_text + "'");
            s.pop_back();
            // Split real and imaginary parts on the last sign that is not
            // a leading sign or an exponent sign.
            std::size_t split = std::string::npos;
            for (std::size_t i = s.size(); i-- > 1;) {
                if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' &&
                    s[i - 1] != 'E') {
                    split = i;
                    break;
                }
            }
            if (split == std::string::npos)
                throw std::invalid_argument(
                    "operator literal: bad coefficient '" + coef_text + "'");
            coefficient = Complex(std::stod(s.substr(0, split)),
                                  std::stod(s.substr(split)));
        } else {
            bool imaginary = false;
            if (!s.empty() && (s.back() == 'i' || s.back() == 'j')) {
                imaginary = true;
                s.pop_back();
            }
            double value = 1.0;
            if (!s.empty() && s != "+" && s != "-") {
                std::size_t used = 0;
                value = std::stod(s, &used);
                if (used != s.size())
                    throw std::invalid_argument(
                        "operator literal: bad coefficient '" + coef_text +
                        "'");
            } else if (s == "-") {
                value = -1.0;
            }
            coefficient =
                imaginary ? Complex(0.0, value) : Complex(value, 0.0);
        }
    }

    std::vector<Pauli> factors(qubit_count, Pauli::I);
    std::istringstream is(body);
    std::string token;
    while (is >> token) {
        char letter = static_cast<char>(
            std::toupper(static_cast<unsigned char>(token[0])));
        Pauli p;
        switch (letter) {
        case 'I':
            p = Pauli::I;
            break;
        case 'X':
            p = Pauli::X;
            break;
        case 'Y':
            p = Pauli::Y;
            break;
        case 'Z':
            p = Pauli::Z;
            break;
        default:
            throw std::invalid_argument("operator literal: bad factor '" + token +
                                        "'");
        }
        if (token.size() == 1) {
            if (p != Pauli::I)
                throw std::invalid_argument(
                    "operator literal: missing qubit index in '" + token + "'");
            continue; // bare identity
        }
        std::size_t used = 0;
        unsigned long idx = std::stoul(token.substr(1), &used);
        if (used + 1 != token.size())
            throw std::invalid_argument("operator literal: bad factor '" + token +
                                        "'");
        if (idx >= qubit_count)
            throw std::invalid_argument("operator literal: qubit index " +
                                        std::to_string(idx) + " out of range");
        if (p != Pauli::I && factors[idx] != Pauli::I)
            throw std::invalid_argument(
                "operator literal: repeated qubit index " + std::to_string(idx));
        factors[idx] = p;
    }
    return {coefficient, std::move(factors)};
}

} // namespace

OperatorSum OperatorSum::parse(const std::string &text,
                               std::size_t qubit_count) {
    std::vector<PauliString> terms;
    std::string current;
    double sign = 1.0;
    auto flush = [&](double next_sign) {
        bool blank = current.find_first_not_of(" \t\n") == std::string::npos;
        if (!blank)
            terms.push_back(parse_term(current, qubit_count).scaled(sign));
        else if (!terms.empty() || sign < 0)
            throw std::invalid_argument("operator literal: empty term");
        current.clear();
        sign = next_sign;
    };
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(')
            ++depth;
        else if (ch == ')')
            --depth;
        if ((ch == '+' || ch == '-') && depth == 0) {
            // A sign inside a coefficient exponent ("1e-3") is not a separator.
            if (i > 0 && (text[i - 1] == 'e' || text[i - 1] == 'E') &&
                !current.empty()) {
                current += ch;
                continue;
            }
            flush(ch == '-' ? -1.0 : 1.0);
        } else {
            current += ch;
        }
    }
    if (current.find_first_not_of(" \t\n") == std::string::npos)
        throw std::invalid_argument("operator literal: trailing separator");
    terms.push_back(parse_term(current, qubit_count).scaled(sign));
    return {qubit_count, std::move(terms)};
}

OperatorSum raising_op(std::size_t qubit, std::size_t qubit_count) {
    return {qubit_count,
            {PauliString::single(Pauli::X, qubit, qubit_count, 0.5),
             PauliString::single(Pauli::Y, qubit, qubit_count,
                                 Complex(0.0, -0.5))}};
}

OperatorSum lowering_op(std::size_t qubit, std::size_t qubit_count) {
    return {qubit_count,
            {PauliString::single(Pauli::X, qubit, qubit_count, 0.5),
             PauliString::single(Pauli::Y, qubit, qubit_count,
                                 Complex(0.0, 0.5))}};
}

OperatorSum projector(int bit, std::size_t qubit, std::size_t qubit_count) {
    double z = bit == 0 ? 0.5 : -0.5;
    return {qubit_count,
            {PauliString::identity(qubit_count, 0.5),
             PauliString::single(Pauli::Z, qubit, qubit_count, z)}};
}

} // namespace vqsim
