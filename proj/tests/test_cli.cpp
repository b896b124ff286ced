#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string &args)
{
    std::string cmd = std::string(CONLINE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), f))
        out.append(buf.data(), n);
    int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("cli: bmf")
{
    auto r = run("bmf T --n 2 --m 2 --json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["factors"].size() == 24);
    CHECK(j["audit"]["ok"] == true);
    auto c = run("bmf C --n 1 --json");
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["factors"].size() == 3);
    CHECK(run("bmf T --n 0 --m 3").code == 2);
    CHECK(run("bmf T --n 3 --m 0").code == 0);
    CHECK(run("bmf X --n 1").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("cli: present and abelianize")
{
    auto p = run("present C --n 1 --raw --projective");
    CHECK(p.code == 0);
    CHECK(p.out.rfind("gens: x1 x1p x2", 0) == 0);
    auto a = run("abelianize C --n 1 --raw --projective --json");
    CHECK(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["rank_free"] == 1);
    CHECK(j["torsion"].empty());
    auto s = run("present T --n 1 --m 1 --paper --simplify");
    CHECK(s.code == 0);
    CHECK(run("present T --n 2 --m 2 --paper --affine").code == 2);
}

TEST_CASE("cli: fingerprint, compare, bigness")
{
    auto f = run("fingerprint C --n 2 --paper --targets S3 --json");
    CHECK(f.code == 0);
    CHECK(nlohmann::json::parse(f.out)["counts"]["S3"] == 30);
    auto c = run("compare T --n 1 --m 1 --targets S3,A4");
    CHECK(c.code == 0);
    CHECK(c.out.find("consistent") != std::string::npos);
    auto b = run("bigness T --n 2 --m 2");
    CHECK(b.code == 0);
    CHECK(nlohmann::json::parse(b.out)["ok"] == true);
    CHECK(run("bigness C --n 1").code == 2);
}
