// Copyright 2026 The pieri-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "pforge/oracle.hpp"
#include "pforge/serialize.hpp"

namespace fs = std::filesystem;
using namespace pforge;

namespace {

struct Run {
    int rc;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(PFORGE_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("pforge-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

std::string write_file(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST_CASE("g-product file converts to the oracle in the m basis") {
    TempDir dir;
    Run ex = run("expand --lambda 2,1 --mode mac-g --format json");
    REQUIRE(ex.rc == 0);
    std::string file = write_file(dir.path / "g.json", ex.out);
    Run m = run("convert --input " + file + " --target m --format json");
    REQUIRE(m.rc == 0);
    CHECK(m.out == symfun_to_json(oracle_Q(Partition{2, 1}, ScalarMode::QT)).dump() + "\n");

    // Identity conversion leaves the document unchanged.
    std::string mfile = write_file(dir.path / "m.json", m.out);
    CHECK(run("convert --input " + mfile + " --target m --format json").out == m.out);

    // Round trip through the g basis and back.
    Run g = run("convert --input " + mfile + " --target g --format json");
    std::string gfile = write_file(dir.path / "g2.json", g.out);
    CHECK(run("convert --input " + gfile + " --target m --format json").out == m.out);
}

TEST_CASE("e-product of P_(1,1) in the p basis") {
    TempDir dir;
    std::string file = write_file(dir.path / "e.json", run("expand --lambda 1,1 --mode mac-e --format json").out);
    CHECK(run("convert --input " + file + " --target p --format text").out == "(1/2)*p[1,1] - (1/2)*p[2]\n");
}

TEST_CASE("malformed convert input exits with 2") {
    TempDir dir;
    CHECK(run("convert --input " + write_file(dir.path / "x.json", "{not json") + " --target m").rc == 2);
    CHECK(run("convert --input " + write_file(dir.path / "y.json", R"({"kind":"symfun"})") + " --target m").rc == 2);
    CHECK(run("convert --input " + write_file(dir.path / "z.json", "{}") + " --target q").rc == 2);
}

TEST_CASE("cache hits reproduce cache misses") {
    TempDir dir;
    const std::string flag = " --cache-dir " + dir.path.string();
    for (const char* fmt : {"json", "text", "latex"}) {
        std::string args = std::string("expand --lambda 3,1,1 --mode mac-e --format ") + fmt;
        Run plain = run(args);
        Run miss = run(args + flag);
        Run hit = run(args + flag);
        CHECK(plain.out == miss.out);
        CHECK(miss.out == hit.out);
    }
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir.path)) {
        ++files;
        CHECK(e.path().extension() == ".json");
    }
    CHECK(files == 1);

    // A corrupt entry is recomputed.
    for (const auto& e : fs::directory_iterator(dir.path)) write_file(e.path(), "garbage");
    CHECK(run("expand --lambda 3,1,1 --mode mac-e" + flag).out == run("expand --lambda 3,1,1 --mode mac-e").out);
}

TEST_CASE("cache location from the environment") {
    TempDir dir;
    std::string env = "PIERI_FORGE_CACHE=" + dir.path.string() + " ";
    std::string cmd = env + PFORGE_CLI + " expand --lambda 2,2 --strategy direct > /dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(!fs::is_empty(dir.path));
}

TEST_CASE("verify output does not depend on the number of jobs") {
    Run one = run("verify --max-weight 4 --mode all --jobs 1");
    Run three = run("verify --max-weight 4 --mode all --jobs 3");
    CHECK(one.rc == 0);
    CHECK(one.out == three.out);
    CHECK(one.out.find("\"failed\":0") != std::string::npos);
}

TEST_CASE("verify reports the discarded term at (1,1,1)") {
    Run r = run("verify --max-weight 3 --mode mac-g");
    CHECK(r.rc == 0);
    CHECK(r.out.find(R"("index":[1,2])") != std::string::npos);
}
