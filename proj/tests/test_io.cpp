#include "doctest.h"

#include <stdexcept>

#include "fqv/io.hpp"

#include <cstdio>
#include <fstream>

using namespace fqv;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/fqv_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("format_double round trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-17, 123456.789012345678, -0.0,
                     2.2250738585072014e-308}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("path CSV round trip is exact") {
    SamplePath p;
    p.n = 16;
    p.values.resize(17);
    p.values[0] = 0.0;
    for (int i = 1; i <= 16; ++i) p.values[i] = std::sin(i * 0.37) / 3.0;
    TempFile f("path.csv");
    write_path_csv(p, f.path);
    const SamplePath q = read_path_csv(f.path);
    CHECK(q.n == p.n);
    CHECK(q.values == p.values);   // bit identical through the text form
}

TEST_CASE("read_path_csv rejects malformed input") {
    TempFile f("bad.csv");
    {
        std::ofstream os(f.path);
        os << "x,y\n1,2\n";
    }
    CHECK_THROWS(read_path_csv(f.path));
    CHECK_THROWS(read_path_csv("/nonexistent/nope.csv"));
}

TEST_CASE("config parsing") {
    TempFile f("conf");
    {
        std::ofstream os(f.path);
        os << "# comment\nreplicates = 12\nhurst=0.7  # trailing\n\nbad line\n";
    }
    const auto kv = read_config(f.path);
    CHECK(kv.at("replicates") == "12");
    CHECK(kv.at("hurst") == "0.7");
    CHECK(kv.size() == 2);
}

TEST_CASE("json reports carry schema version and stable keys") {
    VariationReport r;
    r.s_n = 0.5;
    r.n = 32;
    r.filter_id = "fd:2";
    const auto j = to_json(r);
    CHECK(j["schema_version"] == "1");
    CHECK(j["type"] == "variation_report");
    CHECK(j.dump() == to_json(r).dump());   // deterministic serialization
}
