#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(YF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("level command") {
    const auto r = run_cli("level 2 --format=csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "word,rank,length,ones,twos\n11,2,2,2,0\n2,2,1,0,1\n");

    const auto r0 = run_cli("level 0 --format=csv");
    CHECK(r0.exit_code == 0);
    CHECK(r0.out == "word,rank,length,ones,twos\ne,0,0,0,0\n");

    const auto r4 = run_cli("level 4 --format=json");
    CHECK(r4.exit_code == 0);
    CHECK(r4.out.find("\"count\": 5") != std::string::npos);
    CHECK(r4.out.find("\"schema\": \"yf/1\"") != std::string::npos);
}

TEST_CASE("count command") {
    const auto both = run_cli("count e 22 --method=both --format=csv");
    CHECK(both.exit_code == 0);
    CHECK(both.out == "method,count\nbrute,3\nclosed,3\nequal,true\n");

    const auto single = run_cli("count 1 21");
    CHECK(single.exit_code == 0);
    CHECK(single.out == "closed: 2\n");

    const auto zero = run_cli("count 22 11");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "closed: 0\n");
}

TEST_CASE("ftable command") {
    const auto e = run_cli("ftable e --format=csv");
    CHECK(e.exit_code == 0);
    CHECK(e.out == "z,y0\n0,1/1\n");

    const auto row = run_cli("ftable 21221 --z=0 --format=csv");
    CHECK(row.exit_code == 0);
    CHECK(row.out ==
          "z,y0,y1,y2,y3,y4,y5,y6,y7,y8\n"
          "0,1/720,-1/280,0/1,1/180,0/1,-1/120,1/180,0/1,-1/1680\n");

    const auto grid21 = run_cli("ftable 21 --format=csv");
    CHECK(grid21.exit_code == 0);
    CHECK(grid21.out ==
          "z,y0,y1,y2,y3\n"
          "0,1/3,-1/2,0/1,1/6\n"
          "1,1/3,0/1,0/1,-1/3\n"
          "2,1/3,0/1,0/1,-1/3\n");

    CHECK(run_cli("ftable 21 --z=5").exit_code == 3);
}

TEST_CASE("measure command") {
    const auto rows = run_cli("measure finite:21221 4 --m=6 --format=csv");
    CHECK(rows.exit_code == 0);
    CHECK(rows.out.find("word,mu_lo,mu_hi,h_prime,pi,in_p,in_q,in_r\n") == 0);
    CHECK(std::count(rows.out.begin(), rows.out.end(), '\n') == 6); // header + 5 rows

    // mu(e) = 1; at level 0 the empty word sits in P but misses Q (h' = 0 < l)
    // and misses R (pi(e) = 1 is far from pi(w))
    const auto limit = run_cli("measure geometric:1 0 --limit --format=csv");
    CHECK(limit.exit_code == 0);
    CHECK(limit.out.find("e,1/1,1/1,0,1/1,true,false,false") != std::string::npos);

    // not in the positive boundary: measures still emitted, exit code 3
    const auto degraded = run_cli("measure const:0 3 --limit --format=csv");
    CHECK(degraded.exit_code == 3);
    CHECK(std::count(degraded.out.begin(), degraded.out.end(), '\n') == 4); // header + F_4 rows
    CHECK(degraded.out.find("in_r\n") != std::string::npos);

    // same spec with --no-r is a clean run
    const auto no_r = run_cli("measure const:0 3 --limit --no-r --format=csv");
    CHECK(no_r.exit_code == 0);

    const auto usage = run_cli("measure geometric:1 3");
    CHECK(usage.exit_code == 2);
}

TEST_CASE("concentrate command") {
    const auto csv = run_cli("concentrate geometric:1 --delta=1/2 --n-from=4 --n-to=6 --format=csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("n,pbar_mass_lo,pbar_mass_hi,bound\n") == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);

    const auto usage = run_cli("concentrate geometric:1 --delta=1/2 --n-from=6 --n-to=4");
    CHECK(usage.exit_code == 2);

    const auto refused = run_cli("concentrate const:0 --delta=1/2 --n-from=2 --n-to=4");
    CHECK(refused.exit_code == 3);

    const auto approx =
        run_cli("concentrate geometric:1 --delta=1/2 --n-from=4 --n-to=8 --approx");
    CHECK(approx.exit_code == 0);
    CHECK(approx.out.find("n,pbar_mass_approx,bound_approx\n") == 0);
}

TEST_CASE("parse failures exit with the usage code") {
    CHECK(run_cli("count 13 21").exit_code == 2);
    CHECK(run_cli("level notanumber").exit_code == 2);
    CHECK(run_cli("measure bogus:3 2 --limit").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("byte-identical reruns") {
    for (const char* cmd :
         {"level 5 --format=json", "ftable 121 --format=csv",
          "measure geometric:1 4 --limit --format=json",
          "concentrate geometric:1 --delta=1/2 --n-from=2 --n-to=6 --format=csv"}) {
        const auto a = run_cli(cmd);
        const auto b = run_cli(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}
