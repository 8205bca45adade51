#include <chipfire/io.hpp>

#include <doctest.h>

using namespace chipfire;
using nlohmann::json;

TEST_CASE("matrix text and json forms parse to the same matrix") {
    const IntMatrix want{{3, -1}, {-4, 2}};
    CHECK(parse_matrix("2\n3 -1\n-4 2\n") == want);
    CHECK(parse_matrix("  2 3 -1 -4 2 ") == want); // whitespace shape is free
    CHECK(parse_matrix(R"({"n": 2, "rows": [[3, -1], [-4, 2]]})") == want);
    CHECK(parse_matrix(R"({"n": 2, "rows": [["3", -1], [-4, "2"]]})") == want);

    CHECK(format_matrix_text(want) == "2\n3 -1\n-4 2\n");
    CHECK(parse_matrix(format_matrix_text(want)) == want);
    CHECK(matrix_to_json(want) == json::parse(R"({"n": 2, "rows": [[3, -1], [-4, 2]]})"));
}

TEST_CASE("matrix parse failures name the problem") {
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("   \n "), ParseError);
    CHECK_THROWS_AS(parse_matrix("0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("5000\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n1 2 3\n"), ParseError);          // short
    CHECK_THROWS_AS(parse_matrix("2\n1 2 3 4 5\n"), ParseError);      // trailing
    CHECK_THROWS_AS(parse_matrix("2\n1 2 3 x\n"), ParseError);        // non-integer
    CHECK_THROWS_AS(parse_matrix("{broken"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 2})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": 2, "rows": [[1, 2], [3]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"({"n": -1, "rows": []})"), ParseError);

    try {
        parse_matrix("2\n1 2 3 x\n");
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()) == "not an integer: \"x\"");
    }
}

TEST_CASE("configuration lines are whitespace-separated integers") {
    CHECK(parse_configuration("1 2 3") == IntVec{1, 2, 3});
    CHECK(parse_configuration("  -7\t0\n") == IntVec{-7, 0});
    CHECK(parse_configuration("123456789012345678901234567890") ==
          IntVec{Int("123456789012345678901234567890")});
    CHECK_THROWS_AS(parse_configuration(""), ParseError);
    CHECK_THROWS_AS(parse_configuration("1 two"), ParseError);

    CHECK(format_configuration(IntVec{1, -2, 0}) == "1 -2 0");
    CHECK(parse_configuration(format_configuration(IntVec{-5, 9})) == IntVec{-5, 9});
}

TEST_CASE("json integers switch to decimal strings past 53 bits") {
    const Int edge = Int(1) << 53;
    CHECK(int_to_json(edge - 1) == json(9007199254740991));
    CHECK(int_to_json(edge) == json("9007199254740992"));
    CHECK(int_to_json(1 - edge) == json(-9007199254740991));
    CHECK(int_to_json(-edge) == json("-9007199254740992"));
    CHECK(int_to_json(Int(0)) == json(0));

    const Int huge = Int("-123456789012345678901234567890");
    CHECK(int_from_json(int_to_json(huge)) == huge);
    CHECK(int_from_json(json(42)) == Int(42));
    CHECK(int_from_json(json(-42)) == Int(-42));
    CHECK(int_from_json(json("17")) == Int(17));
    CHECK_THROWS_AS(int_from_json(json(1.5)), ParseError);
    CHECK_THROWS_AS(int_from_json(json("1.5")), ParseError);

    CHECK(vec_to_json(IntVec{1, -2}) == json::parse("[1, -2]"));
    CHECK(ratvec_to_json(RatVec{Rat(1) / Rat(2), Rat(3)}) == json::parse(R"(["1/2", "3"])"));
}

TEST_CASE("file reads fail loudly on missing paths") {
    CHECK_THROWS_AS(read_file("/nonexistent/chipfire-io-test"), ParseError);
}
