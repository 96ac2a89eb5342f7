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

#include "doctest.h"

#include "vqsim/pauli.hpp"

using namespace vqsim;

namespace {
const Complex kI(0.0, 1.0);
}

TEST_CASE("single-qubit Pauli products follow the cyclic phase table") {
    auto x = PauliString::single(Pauli::X, 0, 1);
    auto y = PauliString::single(Pauli::Y, 0, 1);
    auto z = PauliString::single(Pauli::Z, 0, 1);

    auto xy = x * y;
    CHECK(xy.factors()[0] == Pauli::Z);
    CHECK(xy.coefficient() == kI);

    auto yx = y * x;
    CHECK(yx.factors()[0] == Pauli::Z);
    CHECK(yx.coefficient() == -kI);

    auto yz = y * z;
    CHECK(yz.factors()[0] == Pauli::X);
    CHECK(yz.coefficient() == kI);

    auto zx = z * x;
    CHECK(zx.factors()[0] == Pauli::Y);
    CHECK(zx.coefficient() == kI);

    auto xx = x * x;
    CHECK(xx.is_identity());
    CHECK(xx.coefficient() == Complex(1.0));
}

TEST_CASE("multi-qubit products multiply phases per site") {
    // (X0 Y1) * (Y0 Y1) = (XY) (YY) = (iZ0) I1
    PauliString a(1.0, {Pauli::X, Pauli::Y});
    PauliString b(1.0, {Pauli::Y, Pauli::Y});
    auto p = a * b;
    CHECK(p.factors() == std::vector<Pauli>{Pauli::Z, Pauli::I});
    CHECK(p.coefficient() == kI);
}

TEST_CASE("kernel masks and coefficient") {
    // Y0 Z2 on three qubits: flip on qubit 0, phase on qubits 0 and 2.
    PauliString p(2.0, {Pauli::Y, Pauli::I, Pauli::Z});
    CHECK(p.flip_mask() == 0b001);
    CHECK(p.phase_mask() == 0b101);
    CHECK(p.kernel_coefficient() == Complex(0.0, 2.0)); // 2 * i^1
}

TEST_CASE("adjoint conjugates the coefficient only") {
    PauliString p(Complex(1.0, -2.0), {Pauli::X, Pauli::Y});
    auto ad = p.adjoint();
    CHECK(ad.coefficient() == Complex(1.0, 2.0));
    CHECK(ad.factors() == p.factors());
}

TEST_CASE("operator sums canonicalize: merge, sort, drop zeros") {
    PauliString x0(0.5, {Pauli::X, Pauli::I});
    PauliString x0b(0.5, {Pauli::X, Pauli::I});
    PauliString z1(1.0, {Pauli::I, Pauli::Z});
    PauliString z1neg(-1.0, {Pauli::I, Pauli::Z});
    OperatorSum s(2, {x0, z1, x0b, z1neg});
    REQUIRE(s.term_count() == 1);
    CHECK(s.terms()[0].coefficient() == Complex(1.0));
    CHECK(s.terms()[0].factors() == std::vector<Pauli>{Pauli::X, Pauli::I});
}

TEST_CASE("operator arithmetic") {
    auto x = OperatorSum(PauliString::single(Pauli::X, 0, 1));
    auto z = OperatorSum(PauliString::single(Pauli::Z, 0, 1));
    auto prod = x * z; // XZ = -iY
    REQUIRE(prod.term_count() == 1);
    CHECK(prod.terms()[0].factors()[0] == Pauli::Y);
    CHECK(prod.terms()[0].coefficient() == -kI);

    auto sum = x + z;
    CHECK(sum.term_count() == 2);
    CHECK((sum - sum).is_zero());
    auto scaled = Complex(2.0) * x;
    CHECK(scaled.terms()[0].coefficient() == Complex(2.0));
}

TEST_CASE("hermiticity detection") {
    auto h = OperatorSum::parse("0.5*X0 + 0.25*Z0 Z1", 2);
    CHECK(h.is_hermitian());
    auto ah = OperatorSum::parse("0.5i*X0", 2);
    CHECK(!ah.is_hermitian());
    // X - iY is not Hermitian but (X - iY) + (X + iY) = 2X is.
    auto r = raising_op(0, 1);
    CHECK(!r.is_hermitian());
    CHECK((r + lowering_op(0, 1)).is_hermitian());
}

TEST_CASE("parse handles coefficients, identity, and rejects bad input") {
    auto op = OperatorSum::parse("0.25*Z0 Z1 + 1.0*X1 - 0.5i*Y0", 2);
    CHECK(op.term_count() == 3);

    auto ident = OperatorSum::parse("2.0*I", 3);
    REQUIRE(ident.term_count() == 1);
    CHECK(ident.terms()[0].is_identity());
    CHECK(ident.terms()[0].coefficient() == Complex(2.0));

    auto sci = OperatorSum::parse("1e-2*X0", 1);
    CHECK(sci.terms()[0].coefficient() == Complex(0.01));

    CHECK_THROWS(OperatorSum::parse("1.0*X5", 2));  // index out of range
    CHECK_THROWS(OperatorSum::parse("1.0*Q0", 2));  // unknown letter
}

TEST_CASE("ladder operators and projectors") {
    auto r = raising_op(0, 1); // (X - iY)/2 = |1><0|
    REQUIRE(r.term_count() == 2);
    auto l = lowering_op(0, 1);
    // raising followed by lowering projects onto |0>.
    auto p0 = l * r;
    auto expect = projector(0, 0, 1);
    CHECK((p0 - expect).is_zero());
    auto p1 = r * l;
    CHECK((p1 - projector(1, 0, 1)).is_zero());
}

TEST_CASE("round trip through to_string and parse") {
    auto op = OperatorSum::parse("0.75*X0 Y1 - 0.125*Z2", 3);
    auto round = OperatorSum::parse(op.to_string(), 3);
    CHECK((op - round).is_zero());
}
