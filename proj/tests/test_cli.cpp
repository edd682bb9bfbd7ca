#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "bilpair/cli/cli.hpp"
#include "bilpair/equiv/equivalence.hpp"
#include "bilpair/pair/bp_format.hpp"

using namespace bilpair;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "bilpair");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("bilpair_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
};

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("radical") {
        TempDir d;
        std::string f = d.write("a.bp", "field p=3\ndim 3\ne1*e1 = e2\ne2*e2 = e3\n");
        Result r = run_cli({"radical", f});
        CHECK(r.code == cli::exit_ok);
        CHECK(r.out == "dim 1; basis e3\n");
        CHECK(run_cli({"radical", f, "--field", "2"}).out == "dim 1; basis e3\n");
        CHECK(run_cli({"radical", f, "--field", "4"}).code == cli::exit_usage);
        CHECK(run_cli({"radical", (d.path / "missing.bp").string()}).code == cli::exit_usage);
        CHECK(run_cli({"radical", d.write("bad.bp", "field p=6\ndim 2\n")}).code == cli::exit_usage);
        CHECK(run_cli({}).code == cli::exit_usage);
        CHECK(run_cli({"bogus"}).code == cli::exit_usage);
    }

    TEST_CASE("h2") {
        TempDir d;
        Result r = run_cli({"h2", d.write("a3.bp", "field p=3\ndim 2\ne1*e1 = e2\n")});
        CHECK(r.code == cli::exit_ok);
        CHECK(r.out == "coboundary_dim 1\ncoboundary D11\nh2_dim 3\nclass D12\nclass D21\nclass D22\n");
    }

    TEST_CASE("equiv and aut") {
        TempDir d;
        std::string a = d.write("a.bp", "field p=3\ndim 3\ne1*e1 = e2\ne2*e2 = e3\n");
        std::string b = d.write("b.bp", "field p=3\ndim 3\ne1*e1 = e2\ne2*e1 = e3\n");
        Result same = run_cli({"equiv", a, a});
        CHECK(same.code == cli::exit_ok);
        CHECK(same.out == "[[1,0,0],[0,1,0],[0,0,1]]\n");
        CHECK(run_cli({"equiv", a, b}).out == "inequivalent\n");
        Result aut = run_cli({"aut", d.write("a3.bp", "field p=3\ndim 2\ne1*e1 = e2\n")});
        CHECK(aut.code == cli::exit_ok);
        CHECK(aut.out.rfind("order 6\n", 0) == 0);
        CHECK(std::count(aut.out.begin(), aut.out.end(), '\n') == 7);
        CHECK(run_cli({"aut", d.write("big.bp", "field p=5\ndim 6\n")}).code == cli::exit_budget);
    }

    TEST_CASE("extend") {
        TempDir d;
        std::string base = d.write("a3.bp", "field p=3\ndim 2\ne1*e1 = e2\n");
        Result r = run_cli({"extend", base, "--theta", "D22; D12 + 2*D21"});
        CHECK(r.code == cli::exit_ok);
        BilinearPair ext = parse_bp(r.out);
        BilinearPair expected =
            parse_bp("field p=3\ndim 4\ne1*e1 = e2\ne2*e2 = e3\ne1*e2 = e4\ne2*e1 = 2*e4\n");
        CHECK(ext == expected);
        std::string out = (d.path / "ext.bp").string();
        CHECK(run_cli({"extend", base, "--theta", "D22", "--out", out}).code == cli::exit_ok);
        CHECK(read_bp_file(out).dim() == 3);
        CHECK(run_cli({"extend", base, "--theta", "D33"}).code == cli::exit_usage);
        CHECK(run_cli({"extend", base}).code == cli::exit_usage);
    }

    TEST_CASE("classify") {
        TempDir d;
        std::string base = d.write("a3.bp", "field p=3\ndim 2\ne1*e1 = e2\n");
        Result r = run_cli({"classify", base, "--s", "1"});
        CHECK(r.code == cli::exit_ok);
        CHECK(r.out.rfind("base\ts\torbit_index\torbit_size\trepresentative_subspace_rref\n", 0) == 0);
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
        fs::path out = d.path / "orbits";
        Result w = run_cli({"classify", base, "--s", "2", "--out", out.string()});
        CHECK(w.code == cli::exit_ok);
        CHECK(fs::exists(out / "a3_s2_orbits.tsv"));
        std::vector<BilinearPair> reps;
        for (std::size_t k = 0; fs::exists(out / ("a3_s2_" + std::to_string(k) + ".bp")); ++k)
            reps.push_back(read_bp_file((out / ("a3_s2_" + std::to_string(k) + ".bp")).string()));
        REQUIRE(reps.size() >= 2);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK_FALSE(are_equivalent_bruteforce(reps[i], reps[j]).has_value());
        CHECK(run_cli({"classify", base, "--s", "0"}).code == cli::exit_usage);
    }

    TEST_CASE("verify-tables") {
        Result r = run_cli({"verify-tables", "--table", "1", "--field", "7", "--samples", "3"});
        CHECK(r.code == cli::exit_ok);
        CHECK(r.out.rfind("id\tfield\tparams\t", 0) == 0);
        CHECK(r.out.find("# entries 68 failed 0") != std::string::npos);
        Result again = run_cli({"verify-tables", "--table", "1", "--field", "7", "--samples", "3"});
        CHECK(again.out == r.out);
        Result t4 = run_cli({"verify-tables", "--table", "4", "--field", "5", "--samples", "1"});
        CHECK(t4.code == cli::exit_ok);
        CHECK(t4.out.find("case\tfield\tparams\tcheck\tresult\tdetail") != std::string::npos);
        CHECK(run_cli({"verify-tables", "--field", "9"}).code == cli::exit_usage);
        CHECK(run_cli({"verify-tables", "--table", "7"}).code == cli::exit_usage);
        CHECK(run_cli({"verify-tables", "--table", "2", "--field", "7"}).code == cli::exit_budget);
    }
}
