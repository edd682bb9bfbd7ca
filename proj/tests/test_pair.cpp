#include <random>

#include "doctest.h"

#include "bilpair/pair/bp_format.hpp"
#include "bilpair/pair/decompose.hpp"
#include "support.hpp"

using namespace bilpair;

namespace {

// Radical by testing every vector of F_p^n.
std::vector<Vector> radical_by_enumeration(const BilinearPair& p) {
    std::uint32_t q = p.field().modulus();
    std::size_t n = p.dim();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;
    std::vector<Vector> out;
    for (std::size_t code = 0; code < total; ++code) {
        Vector v(n);
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = Scalar::from_int(p.field(), static_cast<long long>(c % q));
            c /= q;
        }
        bool in = true;
        for (std::size_t i = 0; i < n && in; ++i) {
            Vector e = unit_vector(p.field(), n, i);
            in = is_zero_vector(p.multiply(v, e)) && is_zero_vector(p.multiply(e, v));
        }
        if (in) out.push_back(v);
    }
    return out;
}

const char* kA3 = "field p=7\ndim 2\ne1*e1 = 1*e2\n";

}  // namespace

TEST_SUITE("pair") {

TEST_CASE("parse examples") {
    BilinearPair a3 = parse_bp(kA3);
    CHECK(a3.dim() == 2);
    CHECK(a3.at(0, 0, 1).is_one());
    CHECK(a3.product(0, 1) == zero_vector(a3.field(), 2));
    BilinearPair n2 = parse_bp("field p=5\ndim 2\n# nothing\n");
    CHECK(n2 == BilinearPair(2, Field::prime(5)));
    BilinearPair q = parse_bp("field rational\ndim 2\ne1*e2 = 1/2*e1 - 3*e2\ne2*e1 = -e1 # tail\n");
    CHECK(q.at(0, 1, 0) == Scalar::from_fraction(Field::rationals(), 1, 2));
    CHECK(q.at(0, 1, 1) == Scalar::from_int(Field::rationals(), -3));
    CHECK(q.at(1, 0, 0) == Scalar::from_int(Field::rationals(), -1));
}

TEST_CASE("parse errors") {
    auto code_of = [](const char* text) {
        try {
            parse_bp(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::unknown_id;
    };
    CHECK(code_of("field p=7\ndim 2\ne1*e3 = 1*e1\n") == ErrorCode::index_out_of_range);
    CHECK(code_of("field p=7\ndim 2\ne1*e1 = 1*e5\n") == ErrorCode::index_out_of_range);
    CHECK(code_of("field p=8\ndim 2\n") == ErrorCode::non_prime_modulus);
    CHECK(code_of("field p=7\ndim 2\ne1*e1 = 1*e2\ne1*e1 = 1*e1\n") == ErrorCode::parse_error);
    CHECK(code_of("field p=7\ndim 2\ne1 e1 = 1*e2\n") == ErrorCode::parse_error);
    CHECK(code_of("dim 2\n") == ErrorCode::parse_error);
    try {
        parse_bp("field p=7\ndim 2\n\ne1*e1 = x*e2\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("serialize round trip") {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        for (int t = 0; t < 50; ++t) {
            BilinearPair x = testing_support::random_pair(1 + rng() % 4, Field::prime(p), rng);
            CHECK(parse_bp(serialize_bp(x)) == x);
        }
    }
    BilinearPair q = parse_bp("field rational\ndim 2\ne1*e2 = 1/2*e1 + -3*e2\ne2*e2 = -7/5*e1\n");
    CHECK(parse_bp(serialize_bp(q)) == q);
    CHECK(serialize_bp(parse_bp(kA3)) == kA3);
}

TEST_CASE("radical examples") {
    Field f = Field::prime(7);
    BilinearPair a3 = parse_bp(kA3);
    CHECK(radical(a3) == Subspace::span(Matrix::from_ints({{0, 1}}, f)));
    CHECK(radical(BilinearPair(2, f)) == Subspace::full(2, f));
    BilinearPair a331 = parse_bp("field p=7\ndim 3\ne1*e1 = 1*e2\ne2*e2 = 1*e3\n");
    CHECK(radical(a331) == Subspace::span(Matrix::from_ints({{0, 0, 1}}, f)));
}

TEST_CASE("radical agrees with vector enumeration") {
    std::mt19937_64 rng(8);
    for (std::uint32_t p : {2u, 3u}) {
        for (int t = 0; t < 100; ++t) {
            BilinearPair x = testing_support::random_pair(1 + rng() % 4, Field::prime(p), rng, 6);
            Subspace r = radical(x);
            auto members = radical_by_enumeration(x);
            std::size_t expected = 1;
            for (std::size_t i = 0; i < r.dim(); ++i) expected *= p;
            CHECK(members.size() == expected);
            for (const auto& v : members) CHECK(r.contains(v));
            CHECK(radical(opposite(x)) == r);
        }
    }
}

TEST_CASE("product space examples") {
    Field f = Field::prime(7);
    // A1(alpha = 3): e1e1 = e1 + e2, e1e2 = 3e2, e2e1 = -2e2.
    BilinearPair a1 = parse_bp("field p=7\ndim 2\ne1*e1 = 1*e1 + 1*e2\ne1*e2 = 3*e2\ne2*e1 = 5*e2\n");
    CHECK(product_space(a1) == Subspace::full(2, f));
    CHECK(product_space(BilinearPair(2, f)).dim() == 0);
    CHECK(product_space(parse_bp(kA3)) == Subspace::span(Matrix::from_ints({{0, 1}}, f)));
}

TEST_CASE("change of basis") {
    Field f = Field::prime(7);
    BilinearPair a3 = parse_bp(kA3);
    CHECK(apply_change_of_basis(a3, Matrix::identity(2, f)) == a3);
    for (long long x = 1; x < 7; ++x) {
        CHECK(apply_change_of_basis(a3, Matrix::from_ints({{x, 0}, {0, x * x}}, f)) == a3);
    }
    std::mt19937_64 rng(1);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng() % 4;
        BilinearPair x = testing_support::random_pair(n, f, rng);
        Matrix phi = testing_support::random_invertible(n, f, rng);
        BilinearPair y = apply_change_of_basis(x, phi);
        CHECK(apply_change_of_basis(y, inverse(phi)) == x);
        CHECK(radical(y).dim() == radical(x).dim());
        CHECK(product_space(y).dim() == product_space(x).dim());
        // phi is a homomorphism x -> y.
        Vector u = testing_support::random_matrix(1, n, f, rng).row(0);
        Vector v = testing_support::random_matrix(1, n, f, rng).row(0);
        CHECK(phi.apply(x.multiply(u, v)) == y.multiply(phi.apply(u), phi.apply(v)));
        CHECK(apply_change_of_basis(BilinearPair(n, f), phi) == BilinearPair(n, f));
    }
    try {
        apply_change_of_basis(a3, Matrix::from_ints({{1, 1}, {1, 1}}, f));
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::singular_matrix);
    }
}

TEST_CASE("opposite and radical components") {
    std::mt19937_64 rng(2);
    Field f = Field::prime(5);
    for (int t = 0; t < 30; ++t) {
        BilinearPair x = testing_support::random_pair(3, f, rng);
        CHECK(opposite(opposite(x)) == x);
    }
    BilinearPair comm = parse_bp("field p=5\ndim 2\ne1*e2 = 1*e1\ne2*e1 = 1*e1\ne2*e2 = 2*e2\n");
    CHECK(opposite(comm) == comm);
    BilinearPair a3 = parse_bp("field p=5\ndim 2\ne1*e1 = 1*e2\n");
    BilinearPair a3k = add_radical_components(a3, 1);
    CHECK(a3k.dim() == 3);
    CHECK(radical(a3k).dim() == 2);
    CHECK(add_radical_components(a3, 0) == a3);
    CHECK(add_radical_components(BilinearPair(2, f), 2) == BilinearPair(4, f));
}

TEST_CASE("quotient by radical") {
    Field f = Field::prime(7);
    BilinearPair a331 = parse_bp("field p=7\ndim 3\ne1*e1 = 1*e2\ne2*e2 = 1*e3\n");
    CHECK(quotient_by_radical(a331) == parse_bp(kA3));
    CHECK(quotient_by_radical(BilinearPair(3, f)).dim() == 0);
    BilinearPair b1 = parse_bp("field p=7\ndim 2\ne1*e2 = 1*e2\ne2*e1 = 1*e1 + 6*e2\n");
    CHECK(radical(b1).dim() == 0);
    CHECK(quotient_by_radical(b1) == b1);

    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
        BilinearPair y = testing_support::random_pair(4, f, rng, 2);
        // Shifted representatives give the same quotient.
        Subspace r = radical(y);
        if (r.dim() == 0) continue;
        std::size_t q = y.dim() - r.dim();
        Matrix shifts(q, y.dim(), f);
        for (std::size_t a = 0; a < q; ++a) {
            Vector s = zero_vector(f, y.dim());
            for (std::size_t i = 0; i < r.dim(); ++i) {
                Scalar c = testing_support::random_scalar(f, rng);
                for (std::size_t k = 0; k < y.dim(); ++k) s[k] += c * r.basis()(i, k);
            }
            shifts.set_row(a, s);
        }
        CHECK(quotient_with_representatives(y, shifts) == quotient_by_radical(y));
    }
}

TEST_CASE("decompose examples") {
    Field f = Field::prime(7);
    BilinearPair a331 = parse_bp("field p=7\ndim 3\ne1*e1 = 1*e2\ne2*e2 = 1*e3\n");
    Decomposition d = decompose(a331);
    CHECK(d.base == parse_bp(kA3));
    REQUIRE(d.theta.m() == 1);
    CHECK(d.theta.components[0] == BilinearForm::delta(2, f, 1, 1));

    BilinearPair n244 = parse_bp("field p=7\ndim 4\ne1*e2 = 1*e3\ne2*e1 = 1*e4\n");
    Decomposition d2 = decompose(n244);
    CHECK(d2.base == BilinearPair(2, f));
    REQUIRE(d2.theta.m() == 2);
    CHECK(d2.theta.components[0] == BilinearForm::delta(2, f, 0, 1));
    CHECK(d2.theta.components[1] == BilinearForm::delta(2, f, 1, 0));

    BilinearPair b1 = parse_bp("field p=7\ndim 2\ne1*e2 = 1*e2\ne2*e1 = 1*e1 + 6*e2\n");
    try {
        decompose(b1);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::nothing_to_decompose);
    }

    Decomposition full = decompose(BilinearPair(3, f));
    CHECK(full.base.dim() == 0);
    CHECK(full.theta.m() == 3);
}

TEST_CASE("decomposition witness and radical condition") {
    std::mt19937_64 rng(6);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        Field f = Field::prime(p);
        for (int t = 0; t < 60; ++t) {
            BilinearPair y = testing_support::random_pair(2 + rng() % 3, f, rng, 2);
            if (radical(y).dim() == 0) continue;
            Decomposition d = decompose(y);
            BilinearPair adapted = apply_change_of_basis(y, d.to_extension);
            std::size_t u = d.base.dim();
            for (std::size_t i = 0; i < y.dim(); ++i)
                for (std::size_t j = 0; j < y.dim(); ++j)
                    for (std::size_t k = 0; k < y.dim(); ++k) {
                        Scalar expect = Scalar::zero(f);
                        if (i < u && j < u) expect = k < u ? d.base.at(i, j, k) : d.theta.components[k - u](i, j);
                        CHECK(adapted.at(i, j, k) == expect);
                    }
            CHECK(subspace_intersect(radical(d.base), form_radical(d.theta, f)).dim() == 0);
            CHECK(radical(quotient_by_radical(y)).dim() == radical(d.base).dim());
        }
    }
}

}
