#include "cli.hpp"

#include <doctest.h>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = rspin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RSPIN_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("translate")
{
    CHECK(run({"translate", "--r", "5", "--k", "4"}).out == "{\"kind\":\"NS\",\"m\":3}\n");
    CHECK(run({"translate", "--r", "5", "--k", "0"}).out == "{\"kind\":\"R\",\"m\":4}\n");
    CHECK(run({"translate", "--r", "5", "--m", "-1"}).out == "{\"k\":0,\"narrow\":false,\"theta\":\"0\"}\n");
    CHECK(run({"translate", "--r", "3", "--m", "1"}).out == "{\"k\":2,\"narrow\":true,\"theta\":\"2/3\"}\n");
    CHECK(run({"translate", "--r", "3"}).code == rspin::cli::kUsage);
}

TEST_CASE("sectors")
{
    auto res = run({"sectors", "--r", "3"});
    CHECK(res.code == 0);
    CHECK(res.out == "k,theta,narrow,degree,m,kind\n"
                     "0,0,false,,2,R\n"
                     "1,1/3,true,0,0,NS\n"
                     "2,2/3,true,1/3,1,NS\n");
}

TEST_CASE("potential")
{
    CHECK(run({"potential", "--r", "2"}).out == "[{\"coefficient\":\"1/6\",\"monomial\":{\"0\":3}}]\n");
    CHECK(run({"potential", "--r", "3"}).out ==
          "[{\"coefficient\":\"1/72\",\"monomial\":{\"1\":4}},"
          "{\"coefficient\":\"1/2\",\"monomial\":{\"0\":2,\"1\":1}}]\n");
}

TEST_CASE("correlators")
{
    CHECK(run({"correlator", "--r", "3", "--insert", "0:1", "--insert", "0:1", "--insert", "0:1", "--insert", "0:1"})
              .out == "1/3\n");
    CHECK(run({"correlator", "--r", "2", "--insert", "1:0", "--insert", "1:0", "--insert", "0:0", "--insert", "0:0",
               "--insert", "0:0"})
              .out == "2\n");
    CHECK(run({"correlator", "--r", "3", "--insert", "0:-1", "--insert", "0:0", "--insert", "0:0"}).out == "0\n");
    CHECK(run({"correlator", "--r", "3", "--insert", "x"}).code == rspin::cli::kUsage);

    auto table = run({"correlator", "--r", "2", "--table", "--n", "4", "--order", "1"});
    CHECK(table.code == 0);
    CHECK(table.out == "n,insertions,value\n3,0:0 0:0 0:0,1\n4,0:0 0:0 0:0 1:0,1\n");
}

TEST_CASE("selection and dimension")
{
    CHECK(run({"selection", "--r", "3", "--g", "0", "--k", "2,2,2,2"}).out ==
          "{\"bundle_degree\":\"-2\",\"m\":[1,1,1,1],\"nonempty\":true}\n");
    CHECK(run({"dimension", "--r", "3", "--m", "1,1,1,1"}).out ==
          "{\"D\":\"1\",\"homological_degree\":0,\"vanishes\":false}\n");
}

TEST_CASE("fourpoint")
{
    CHECK(run({"fourpoint", "--r", "3"}).out == "m1,m2,m3,m4,value\n1,1,1,1,1/3\n");
}

TEST_CASE("graph files")
{
    auto good = run({"graphs", "--graph", data("corolla_r2.json")});
    CHECK(good.code == 0);
    CHECK(good.out.find("\"valid\":true") != std::string::npos);
    auto bad = run({"graphs", "--graph", data("bad_node_r3.json")});
    CHECK(bad.code == rspin::cli::kCheckFailed);
    CHECK(bad.out.find("\"valid\":false") != std::string::npos);
    CHECK(run({"graphs", "--graph", data("missing.json")}).code == rspin::cli::kUsage);
}

TEST_CASE("graph enumeration is deterministic")
{
    auto a = run({"graphs", "--r", "3", "--g", "0", "--n", "5"});
    auto b = run({"graphs", "--r", "3", "--g", "0", "--n", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("check suites")
{
    auto csv = run({"check", "--suite", "kdv", "--order", "6"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("suite,check,result,detail\nkdv,dkdv_residual,PASS,", 0) == 0);
    CHECK(csv.out.find('\r') == std::string::npos);

    auto json = run({"check", "--suite", "fourpoint", "--r", "4", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.rfind("[{\"check\":\"dual_engine_agreement\"", 0) == 0);

    CHECK(run({"check", "--suite", "hydro"}).code == rspin::cli::kUsage);
    CHECK(run({"check", "--suite", "bogus", "--r", "3"}).code == rspin::cli::kUsage);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == rspin::cli::kUsage);
    CHECK(run({"--help"}).code == rspin::cli::kOk);
    CHECK(run({"sectors", "--r", "3", "--bogus"}).code == rspin::cli::kUsage);
    CHECK(run({"sectors", "--r", "1"}).code == rspin::cli::kUsage);
    auto big = run({"graphs", "--r", "2", "--g", "3", "--n", "1"});
    CHECK(big.code == rspin::cli::kScaleLimit);
    CHECK(big.out.empty());
    CHECK_FALSE(big.err.empty());
    CHECK(run({"check", "--suite", "hydro", "--r", "5", "--order", "4"}).code == rspin::cli::kScaleLimit);
}
