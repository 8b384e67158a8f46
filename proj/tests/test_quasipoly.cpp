#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "support.hpp"

using namespace qpc;
using support::q;

TEST_CASE("constructor validates the coefficient table shape")
{
    CHECK_THROWS_AS(QuasiPolynomial(2, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(QuasiPolynomial(1, 2, {{Rat(1), Rat(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(QuasiPolynomial(1, 1, {{Rat(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(QuasiPolynomial(1, 0, {}), std::invalid_argument);
    CHECK_NOTHROW(QuasiPolynomial(0, 1, {{Rat(5)}}));
}

TEST_CASE("polynomial evaluation, including negative arguments")
{
    // (k+1)^2 from ascending coefficients.
    auto sq = QuasiPolynomial::from_polynomial({Rat(1), Rat(2), Rat(1)});
    CHECK(sq.degree() == 2);
    CHECK(sq.period() == 1);
    CHECK(sq.evaluate(0) == Rat(1));
    CHECK(sq.evaluate(3) == Rat(16));
    CHECK(sq.evaluate(-3) == Rat(4));
    CHECK(sq.coefficient(0, 1) == Rat(2));
}

TEST_CASE("periodic coefficients select by true residue")
{
    // c0 alternates 1, 1/2; c1 is constant 1/2.
    QuasiPolynomial f(1, 2, {{Rat(1), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)}});
    CHECK(f.evaluate(2) == Rat(2));       // residue 0
    CHECK(f.evaluate(3) == Rat(2));       // residue 1
    CHECK(f.evaluate(-1) == Rat(0));      // residue of -1 mod 2 is 1
    CHECK(f.coefficient(5, 0) == Rat(1, 2));
}

TEST_CASE("equality is representation independent")
{
    auto sq = QuasiPolynomial::from_polynomial({Rat(1), Rat(2), Rat(1)});
    QuasiPolynomial lifted = sq.lifted(3);
    CHECK(lifted.period() == 3);
    CHECK(sq == lifted);
    CHECK(lifted.reduced_to_minimal_period().period() == 1);

    QuasiPolynomial other(2, 1, {{Rat(1), Rat(2), Rat(2)}});
    CHECK(sq != other);

    // Same values, different stated degree with zero leading coefficients.
    QuasiPolynomial padded(3, 1, {{Rat(1), Rat(2), Rat(1), Rat(0)}});
    CHECK(sq == padded);
}

TEST_CASE("minimal period detection per coefficient and overall")
{
    // Table period 4; c0 truly has period 2, c1 period 1.
    QuasiPolynomial f(1, 4,
                      {{Rat(1), Rat(3)},
                       {Rat(1, 2), Rat(3)},
                       {Rat(1), Rat(3)},
                       {Rat(1, 2), Rat(3)}});
    CHECK(f.minimal_coefficient_period(0) == 2);
    CHECK(f.minimal_coefficient_period(1) == 1);
    CHECK(f.minimal_quasi_period() == 2);
    auto reduced = f.reduced_to_minimal_period();
    CHECK(reduced.period() == 2);
    CHECK(reduced == f);

    // Coefficient periods 2 and 3 combine to overall period 6.
    QuasiPolynomial g(1, 6,
                      {{Rat(0), Rat(1)},
                       {Rat(1), Rat(2)},
                       {Rat(0), Rat(3)},
                       {Rat(1), Rat(1)},
                       {Rat(0), Rat(2)},
                       {Rat(1), Rat(3)}});
    CHECK(g.minimal_coefficient_period(0) == 2);
    CHECK(g.minimal_coefficient_period(1) == 3);
    CHECK(g.minimal_quasi_period() == 6);
}

TEST_CASE("sums and differences align degree and period")
{
    auto a = QuasiPolynomial::from_polynomial({Rat(1), Rat(1)});          // k + 1
    QuasiPolynomial b(0, 2, {{Rat(1)}, {Rat(0)}});                        // [k even]
    auto s = a + b;
    CHECK(s.period() == 2);
    CHECK(s.evaluate(2) == Rat(4));
    CHECK(s.evaluate(3) == Rat(4));

    auto d = s - b;
    CHECK(d == a);
    CHECK(d.reduced_to_minimal_period().period() == 1);

    auto scaled = Rat(2) * a;
    CHECK(scaled.evaluate(5) == Rat(12));
    auto twice = a + a;
    CHECK(scaled == twice);
}

TEST_CASE("interpolation reconstructs counts exactly")
{
    // f(k) = k^2 - k + 1 is integer valued; degree 2, period 1.
    std::map<std::int64_t, Int> samples;
    for (std::int64_t k = 1; k <= 3; ++k)
        samples[k] = Int(k * k - k + 1);
    auto f = interpolate_counts(samples, 2, 1);
    CHECK(f == QuasiPolynomial::from_polynomial({Rat(1), Rat(-1), Rat(1)}));

    // Degree 1, period 2: f(k) = k for even k, 2k for odd k.
    std::map<std::int64_t, Int> alt;
    for (std::int64_t k = 1; k <= 4; ++k)
        alt[k] = Int(k % 2 == 0 ? k : 2 * k);
    auto g = interpolate_counts(alt, 1, 2);
    CHECK(g.coefficient(0, 1) == Rat(1));
    CHECK(g.coefficient(1, 1) == Rat(2));
    CHECK(g.coefficient(0, 0) == Rat(0));
    CHECK(g.coefficient(1, 0) == Rat(0));
    for (std::int64_t k = 1; k <= 8; ++k)
        CHECK(g.evaluate(k) == Rat(k % 2 == 0 ? k : 2 * k));
}

TEST_CASE("interpolation rejects inconsistent or insufficient samples")
{
    // Samples of k^2 cannot be explained by a declared degree-1 polynomial.
    std::map<std::int64_t, Int> quad;
    for (std::int64_t k = 1; k <= 4; ++k)
        quad[k] = Int(k * k);
    CHECK_THROWS_AS(interpolate_counts(quad, 1, 1), std::invalid_argument);

    // Residue class 0 mod 2 has no samples at all.
    std::map<std::int64_t, Int> sparse;
    sparse[1] = Int(1);
    sparse[3] = Int(3);
    CHECK_THROWS_AS(interpolate_counts(sparse, 1, 2), std::invalid_argument);

    // Too few samples in a class for the declared degree.
    std::map<std::int64_t, Int> thin;
    thin[1] = Int(1);
    thin[2] = Int(2);
    CHECK_THROWS_AS(interpolate_counts(thin, 2, 1), std::invalid_argument);
}

TEST_CASE("interpolation handles genuine quasi-periods from segment counts")
{
    // Counts of [0, 1/3] at k = 1..8: floor(k/3) + 1.
    std::map<std::int64_t, Int> counts;
    for (std::int64_t k = 1; k <= 6; ++k)
        counts[k] = Int(k / 3 + 1);
    auto f = interpolate_counts(counts, 1, 3);
    CHECK(f.coefficient(0, 0) == Rat(1));
    CHECK(f.coefficient(1, 0) == Rat(2, 3));
    CHECK(f.coefficient(2, 0) == Rat(1, 3));
    for (std::size_t r = 0; r < 3; ++r)
        CHECK(f.coefficient(r, 1) == Rat(1, 3));
    CHECK(f.minimal_quasi_period() == 3);
}
