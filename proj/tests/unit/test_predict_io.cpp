#include "oracles.hpp"

#include "dixkit/csv.hpp"
#include "dixkit/error.hpp"
#include "dixkit/probability.hpp"

#include <doctest.h>

#include <fmt/format.h>

#include <cmath>
#include <sstream>

using namespace dixkit;
using predict::ParseOptions;
using predict::ProbabilityMatrix;

namespace {

ProbabilityMatrix parse(const std::string &text, ParseOptions opts = {}) {
    std::istringstream in(text);
    return predict::parse_probability_text(in, "t.csv", "default", opts);
}

std::string serialize(const ProbabilityMatrix &pm) {
    std::ostringstream out;
    predict::write_probability(out, pm);
    return out.str();
}

// Random valid file: softmax of random logits, so values have full precision.
std::string random_file(std::mt19937_64 &gen, std::size_t n, std::size_t m) {
    std::normal_distribution<double> z(0.0, 2.0);
    std::ostringstream out;
    out << "# model=fuzz\nsample_id";
    for (std::size_t c = 0; c < m; ++c) out << ",class" << c;
    out << '\n';
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<double> e(m);
        double sum = 0.0;
        for (auto &v : e) sum += (v = std::exp(z(gen)));
        out << "id" << r;
        for (double v : e) out << ',' << fmt::format("{}", v / sum);
        out << '\n';
    }
    return out.str();
}

}  // namespace

TEST_SUITE("predict_io") {
    TEST_CASE("well-formed file") {
        const auto pm = parse("# model=alpha\nsample_id,a,b,c\ns1,0.5,0.3,0.2\ns2,0.1,0.1,0.8\n");
        CHECK(pm.model_name == "alpha");
        CHECK(pm.samples() == 2);
        CHECK(pm.classes() == 3);
        CHECK(pm.class_names == std::vector<std::string>{ "a", "b", "c" });
        CHECK(pm.sample_ids == std::vector<std::string>{ "s1", "s2" });
        CHECK(pm.rows(1, 2) == 0.8);
        CHECK(parse("sample_id,a,b\nx,1,0\n").model_name == "default");
    }

    TEST_CASE("row sum tolerance") {
        CHECK_THROWS_WITH_AS(parse("sample_id,a,b\nx,0.5,0.6\n"), doctest::Contains("t.csv:2"), DataError);
        const auto ok = parse("sample_id,a,b\nx,0.5000004,0.4999996\n");
        CHECK(ok.rows(0, 0) == 0.5000004);

        // Off by 1e-4: rejected unless renormalization is requested.
        CHECK_THROWS_AS(parse("sample_id,a,b\nx,0.5001,0.5\n"), DataError);
        const auto fixed = parse("sample_id,a,b\nx,0.5001,0.5\n", { true });
        CHECK(fixed.rows(0, 0) + fixed.rows(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(fixed.rows(0, 0) == doctest::Approx(0.5001 / 1.0001).epsilon(1e-15));
        // Rows already within 1e-6 are left alone even with renormalize.
        CHECK(parse("sample_id,a,b\nx,0.5000004,0.4999996\n", { true }).rows(0, 0) == 0.5000004);
        // Beyond 1e-3 renormalization does not help.
        CHECK_THROWS_AS(parse("sample_id,a,b\nx,0.51,0.5\n", { true }), DataError);
    }

    TEST_CASE("structural errors") {
        CHECK_THROWS_AS(parse(""), DataError);
        CHECK_THROWS_AS(parse("id,a,b\nx,0.5,0.5\n"), DataError);                     // header name
        CHECK_THROWS_AS(parse("sample_id,a\nx,1\n"), DataError);                       // m < 2
        CHECK_THROWS_AS(parse("sample_id,a,b\n"), DataError);                          // N = 0
        CHECK_THROWS_AS(parse("sample_id,a,a\nx,0.5,0.5\n"), DataError);               // duplicate class
        CHECK_THROWS_AS(parse("sample_id,a,b\nx,0.5,0.5\nx,0.5,0.5\n"), DataError);    // duplicate id
        CHECK_THROWS_AS(parse("sample_id,a,b\nx,0.5\n"), DataError);                   // short row
        CHECK_THROWS_AS(parse("sample_id,a,b\nx,0.5,0.5,0\n"), DataError);             // long row
        CHECK_THROWS_AS(parse("sample_id,a,b\nx,half,0.5\n"), DataError);              // non-numeric
        CHECK_THROWS_AS(parse("sample_id,a,b\nx,1.5,-0.5\n"), DataError);              // out of range
        CHECK_THROWS_AS(parse("sample_id,a,b\nx,nan,0.5\n"), DataError);
        CHECK_THROWS_AS(parse("# classes=b,a\nsample_id,a,b\nx,0.5,0.5\n"), DataError);  // metadata mismatch
        CHECK_NOTHROW(parse("# classes=a,b\nsample_id,a,b\n\nx,0.5,0.5\n"));
    }

    TEST_CASE("round trip keeps every bit") {
        std::mt19937_64 gen(12);
        for (int i = 0; i < 50; ++i) {
            const auto text = random_file(gen, 1 + gen() % 20, 2 + gen() % 5);
            const auto pm = parse(text);
            const auto again = parse(serialize(pm));
            CHECK(again.rows == pm.rows);
            CHECK(again.sample_ids == pm.sample_ids);
            CHECK(again.class_names == pm.class_names);
            CHECK(again.model_name == "fuzz");
            CHECK(serialize(again) == serialize(pm));
        }
    }

    TEST_CASE("every invariant-breaking mutation is rejected") {
        std::mt19937_64 gen(13);
        int mutations = 0;
        for (int i = 0; i < 300; ++i) {
            const std::size_t n = 2 + gen() % 10;
            const std::size_t m = 2 + gen() % 4;
            const std::string text = random_file(gen, n, m);
            std::istringstream in(text);
            auto lines = csv::read_lines(in);
            // lines[0] metadata, lines[1] header, lines[2..] rows
            const std::size_t row = 2 + gen() % n;
            auto fields = csv::split_line(lines[row].text);
            const std::size_t col = 1 + gen() % m;
            switch (i % 5) {
                case 0: fields[col] = "1.5"; break;
                case 1: fields[col] = "-0.25"; break;
                case 2: fields[0] = csv::split_line(lines[row == 2 ? 3 : 2].text)[0]; break;
                case 3: fields.erase(fields.begin() + static_cast<std::ptrdiff_t>(col)); break;
                case 4: fields[col] = "0x1p-2"; break;
            }
            lines[row].text = csv::join(fields);
            std::string mutated;
            for (const auto &l : lines) mutated += l.text + "\n";
            REQUIRE_THROWS_AS(parse(mutated), DataError);
            ++mutations;
        }
        CHECK(mutations == 300);
    }

    TEST_CASE("bundle alignment") {
        const auto a = parse("sample_id,x,y\ns1,0.5,0.5\ns2,1,0\n");
        const auto b = parse("sample_id,x,y\ns1,0.2,0.8\ns2,0,1\n");
        const auto c = parse("sample_id,x,y\ns1,0.9,0.1\ns2,0.3,0.7\n");
        const auto bundle = predict::assemble_bundle({ a, b, c });
        CHECK(bundle.size() == 3);
        CHECK(bundle.samples() == 2);
        CHECK(bundle.classes() == 2);
        CHECK(predict::assemble_bundle({ a }).size() == 1);

        CHECK_THROWS_AS(predict::assemble_bundle({}), DataError);
        CHECK_THROWS_AS(predict::assemble_bundle({ a, parse("sample_id,y,x\ns1,0.5,0.5\ns2,1,0\n") }), DataError);
        CHECK_THROWS_AS(predict::assemble_bundle({ a, parse("sample_id,x,y\ns2,0.5,0.5\ns1,1,0\n") }), DataError);
        CHECK_THROWS_AS(predict::assemble_bundle({ a, parse("sample_id,x,y\ns1,0.5,0.5\n") }), DataError);
    }

    TEST_CASE("file entry point names the model after the file") {
        testing::TempDir dir("prob");
        testing::write_file(dir / "beta.csv", "sample_id,a,b\nx,0.25,0.75\n");
        const auto pm = predict::parse_probability_file(dir / "beta.csv");
        CHECK(pm.model_name == "beta");
        CHECK_THROWS_AS(predict::parse_probability_file(dir / "missing.csv"), DataError);
    }
}
