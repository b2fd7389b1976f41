#include <doctest.h>

#include "helpers.hpp"
#include "shlin/error.hpp"
#include "shlin/gf.hpp"

using namespace shlin;

TEST_CASE("prime field inverse") {
  const FieldPtr f5 = make_field(5);
  CHECK(f5->q() == 5);
  CHECK(f5->inv(2) == 3);
  CHECK(f5->modulus().empty());
}

TEST_CASE("F4 reduces x*x to x+1") {
  const FieldPtr f4 = make_field(2, 2);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
  CHECK(f4->mul(2, 2) == 3);
}

TEST_CASE("F9 with x^2+1 has x*x = -1") {
  const FieldPtr f9 = make_field(3, 2, std::vector<int>{1, 0, 1});
  CHECK(f9->has_default_modulus());
  // x has code 3 (digits 0,1); -1 = 2.
  CHECK(f9->mul(3, 3) == 2);
}

TEST_CASE("default moduli") {
  CHECK(default_modulus(2, 2) == std::vector<int>{1, 1, 1});
  CHECK(default_modulus(2, 3) == std::vector<int>{1, 1, 0, 1});
  CHECK(default_modulus(3, 2) == std::vector<int>{1, 0, 1});
  for (auto [p, m] : {std::pair{2, 4}, {5, 2}, {3, 3}, {7, 2}, {2, 8}}) {
    CHECK(is_irreducible(p, default_modulus(p, m)));
  }
}

TEST_CASE("tables match naive polynomial arithmetic") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49}) {
    CAPTURE(q);
    const FieldPtr f = make_field_of_order(q);
    const oracle::PolyField o = testutil::oracle_of(*f);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        const auto ea = static_cast<Elem>(a);
        const auto eb = static_cast<Elem>(b);
        REQUIRE(f->add(ea, eb) == o.add(a, b));
        REQUIRE(f->mul(ea, eb) == o.mul(a, b));
        REQUIRE(f->sub(ea, eb) == o.sub(a, b));
        REQUIRE(f->add(ea, eb) == f->add_direct(ea, eb));
        REQUIRE(f->mul(ea, eb) == f->mul_direct(ea, eb));
      }
    }
  }
}

TEST_CASE("field axioms for q <= 9") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const FieldPtr f = make_field_of_order(q);
    for (int a = 0; a < q; ++a) {
      const auto ea = static_cast<Elem>(a);
      Elem s = 0;
      for (int i = 0; i < f->p(); ++i) s = f->add(s, ea);
      CHECK(s == 0);
      if (a != 0) {
        CHECK(f->pow(ea, static_cast<std::uint64_t>(q - 1)) == 1);
        CHECK(f->mul(ea, f->inv(ea)) == 1);
      }
      for (int b = 0; b < q; ++b) {
        const auto eb = static_cast<Elem>(b);
        CHECK(f->add(ea, eb) == f->add(eb, ea));
        CHECK(f->mul(ea, eb) == f->mul(eb, ea));
        for (int c = 0; c < q; ++c) {
          const auto ec = static_cast<Elem>(c);
          CHECK(f->mul(ea, f->add(eb, ec)) == f->add(f->mul(ea, eb), f->mul(ea, ec)));
          CHECK(f->mul(f->mul(ea, eb), ec) == f->mul(ea, f->mul(eb, ec)));
          CHECK(f->add(f->add(ea, eb), ec) == f->add(ea, f->add(eb, ec)));
        }
      }
    }
  }
}

TEST_CASE("nonzero elements ascend") {
  CHECK(make_field(2)->nonzero_elems() == std::vector<Elem>{1});
  CHECK(make_field(5)->nonzero_elems() == std::vector<Elem>{1, 2, 3, 4});
  const auto nz9 = make_field(3, 2)->nonzero_elems();
  REQUIRE(nz9.size() == 8);
  for (std::size_t i = 0; i < nz9.size(); ++i) CHECK(nz9[i] == i + 1);
}

TEST_CASE("construction errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([] { make_field(4); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_field(2, 2, std::vector<int>{1, 0, 1}); }) == ErrorCode::ReduciblePolynomial);
  CHECK(code_of([] { make_field(2, 9); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { make_field_of_order(6); }) == ErrorCode::NotPrime);
  CHECK_THROWS_AS(make_field(5)->inv(0), Error);
}

TEST_CASE("header names non-default moduli only") {
  CHECK(make_field(3, 2)->header() == "q=9");
  const FieldPtr alt = make_field(3, 2, std::vector<int>{2, 1, 1});
  CHECK(alt->header() == "q=9 poly=2,1,1");
  CHECK_FALSE(alt->same_as(*make_field(3, 2)));
}
