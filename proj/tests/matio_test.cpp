// Copyright 2026 The skrr Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "skrr/matio.hpp"
#include "skrr/rng.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace skrr;
using namespace testsup;

TEST_CASE("read_matrix parses plain CSV") {
    TempDir tmp("matio_read");
    write_file(tmp / "m.csv", "1,2\n3,4\n");
    const Matrix m = read_matrix(tmp / "m.csv");
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 2);
    CHECK(m(0, 0) == 1.0);
    CHECK(m(0, 1) == 2.0);
    CHECK(m(1, 0) == 3.0);
    CHECK(m(1, 1) == 4.0);
}

TEST_CASE("read_matrix accepts CRLF and a missing final newline") {
    TempDir tmp("matio_crlf");
    write_file(tmp / "m.csv", "1,2\r\n3,4");
    const Matrix m = read_matrix(tmp / "m.csv");
    CHECK(m(1, 1) == 4.0);
}

TEST_CASE("read_matrix reports ragged rows with the line number") {
    TempDir tmp("matio_ragged");
    write_file(tmp / "m.csv", "1,2\n3\n");
    const auto msg = thrown_message<std::runtime_error>([&] { read_matrix(tmp / "m.csv"); });
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("ragged") != std::string::npos);
}

TEST_CASE("read_matrix rejects unparsable tokens and non-finite values") {
    TempDir tmp("matio_bad");
    write_file(tmp / "a.csv", "1,2\n3,abc\n");
    CHECK(thrown_message<std::runtime_error>([&] { read_matrix(tmp / "a.csv"); })
              .find("line 2") != std::string::npos);
    write_file(tmp / "b.csv", "nan\n");
    CHECK(thrown_message<std::runtime_error>([&] { read_matrix(tmp / "b.csv"); })
              .find("non-finite") != std::string::npos);
    write_file(tmp / "c.csv", "1\ninf\n");
    CHECK(thrown_message<std::runtime_error>([&] { read_matrix(tmp / "c.csv"); })
              .find("line 2") != std::string::npos);
}

TEST_CASE("read_matrix requires the file to exist") {
    CHECK_THROWS_AS((void)read_matrix("/nonexistent/skrr.csv"), std::runtime_error);
}

TEST_CASE("write_matrix emits compact 17-digit text") {
    TempDir tmp("matio_write");
    Matrix one(1, 1);
    one << 0.0;
    write_matrix(tmp / "zero.csv", one);
    CHECK(read_file(tmp / "zero.csv") == "0\n");

    Matrix row(1, 2);
    row << 1.5, -2.0;
    write_matrix(tmp / "row.csv", row);
    CHECK(read_file(tmp / "row.csv") == "1.5,-2\n");
}

TEST_CASE("write then read is the identity") {
    TempDir tmp("matio_roundtrip");
    Lcg64 rng(42);
    const Matrix m = rand_matrix(rng, 17, 5, -1e6, 1e6);
    write_matrix(tmp / "m.csv", m);
    const Matrix back = read_matrix(tmp / "m.csv");
    // 17 significant digits round-trip doubles exactly, well inside the
    // 1e-12 relative contract.
    CHECK(back == m);
}

TEST_CASE("write_matrix rejects non-finite input") {
    TempDir tmp("matio_nonfinite");
    Matrix m(1, 1);
    m << std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(write_matrix(tmp / "m.csv", m), std::invalid_argument);
}

TEST_CASE("read_labeled splits the trailing label column") {
    TempDir tmp("matio_labeled");
    write_file(tmp / "d.csv", "1,2,0\n3,4,1\n");
    const LabeledSet set = read_labeled(tmp / "d.csv");
    REQUIRE(set.points.rows() == 2);
    REQUIRE(set.points.cols() == 2);
    CHECK(set.points(1, 0) == 3.0);
    CHECK(set.labels == std::vector<long>{0, 1});

    write_file(tmp / "single.csv", "5,7\n");
    const LabeledSet single = read_labeled(tmp / "single.csv");
    CHECK(single.points(0, 0) == 5.0);
    CHECK(single.labels == std::vector<long>{7});
}

TEST_CASE("read_labeled rejects non-integer and negative labels") {
    TempDir tmp("matio_badlabel");
    write_file(tmp / "a.csv", "1,2,0.5\n");
    CHECK(thrown_message<std::runtime_error>([&] { read_labeled(tmp / "a.csv"); })
              .find("non-integer label") != std::string::npos);
    write_file(tmp / "b.csv", "1,2,-3\n");
    CHECK(thrown_message<std::runtime_error>([&] { read_labeled(tmp / "b.csv"); })
              .find("negative label") != std::string::npos);
}
