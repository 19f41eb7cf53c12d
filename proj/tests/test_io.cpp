#include <gtest/gtest.h>

#include <sstream>

#include "mton/io.hpp"

using namespace mton;

TEST(Io, PartitionRoundTrip) {
  const auto p = validate_noncrossing({{3, 4, 7, 9}, {1, 2}, {8}, {5, 6}}, 9);
  const Json j = to_json(p);
  EXPECT_EQ(j.dump(), R"({"n":9,"blocks":[[1,2],[3,4,7,9],[5,6],[8]]})");
  EXPECT_EQ(nc_partition_from_json(j), p);
}

TEST(Io, OrderedRoundTrip) {
  for (int n = 1; n <= 5; ++n) {
    enumerate(n, TreeKind::Full, [](const OrderedNcPartition& op) {
      ASSERT_EQ(ordered_from_json(Json::parse(to_json(op).dump())), op);
    });
  }
}

TEST(Io, TreeCodeRoundTrip) {
  const auto op = unrank(BigInteger(1000), 7, TreeKind::Full);
  const TreeCode c = encode(op, TreeKind::Full);
  const TreeCode back = tree_code_from_json(Json::parse(to_json(c).dump()));
  EXPECT_EQ(decode(back), op);
}

TEST(Io, PolynomialRoundTrip) {
  ExactPolynomial p;
  p.add_term(0, 7);
  p.add_term(1, 5);
  p.add_term(4, rational(-3, 8));
  EXPECT_EQ(to_json(p).dump(), R"({"coeffs":{"0":"7","1":"5","4":"-3/8"}})");
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
}

TEST(Io, ParseErrors) {
  auto code_of = [](const char* text, auto parse) {
    try {
      parse(Json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::VerificationFailed;  // sentinel: nothing thrown
  };
  EXPECT_EQ(code_of(R"({"blocks":[[1]]})", nc_partition_from_json), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"n":4,"blocks":[[1,3],[2,4]]})", nc_partition_from_json), ErrorCode::Crossing);
  EXPECT_EQ(code_of(R"({"n":2,"blocks_by_label":[[2],[1]],"x":1})", ordered_from_json), ErrorCode::VerificationFailed);
  EXPECT_EQ(code_of(R"({"n":3,"blocks_by_label":[[2],[1,3]]})", ordered_from_json) != ErrorCode::VerificationFailed,
            true);
  EXPECT_EQ(code_of(R"({"coeffs":{"0":"1/0"}})", polynomial_from_json), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"kind":"tree","digits":[]})", tree_code_from_json), ErrorCode::ParseError);
}

TEST(Io, StreamOperators) {
  std::ostringstream os;
  os << ExactPolynomial::t(2) << " " << validate_noncrossing({{1, 2}}, 2);
  EXPECT_EQ(os.str(), R"(t^2 {"n":2,"blocks":[[1,2]]})");
}
