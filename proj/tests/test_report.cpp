#include <doctest.h>

#include "merocoef/errors.hpp"
#include "merocoef/report.hpp"

using namespace merocoef;

namespace {

nlohmann::ordered_json strip_time(nlohmann::ordered_json j) {
    j["metadata"].erase("wall_time_seconds");
    return j;
}

RunConfig base(Command c, const char* target) {
    RunConfig cfg;
    cfg.command = c;
    if (target) cfg.target = target;
    cfg.threads = 2;
    return cfg;
}

}  // namespace

TEST_SUITE("cli_harness") {
    TEST_CASE("rational and point parsing") {
        CHECK(parse_rational("3") == mpq_class(3));
        CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
        CHECK(parse_rational("0.125") == mpq_class(1, 8));
        CHECK(parse_rational("-.5") == mpq_class(-1, 2));
        CHECK(parse_rational("010") == mpq_class(10));
        CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
        CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
        CHECK_THROWS_AS(parse_rational(""), InvalidArgument);

        BigComplex p = parse_point("1/2+3i", 64);
        CHECK(p.re() == BigReal(mpq_class(1, 2), 64));
        CHECK(p.im() == BigReal(3L, 64));
        BigComplex q = parse_point("2i", 64);
        CHECK(q.re().is_zero());
        CHECK(q.im() == BigReal(2L, 64));
        BigComplex r = parse_point("-1/3-2i", 64);
        CHECK(r.im() == BigReal(-2L, 64));
        BigComplex s = parse_point("0.25,1.5", 64);
        CHECK(s.im() == BigReal(mpq_class(3, 2), 64));
        CHECK(parse_point("i", 64).im() == BigReal(1L, 64));
        CHECK_THROWS_AS(parse_point("2j", 64), InvalidArgument);
    }

    TEST_CASE("commands and formats") {
        CHECK(parse_command("poincare-check") == Command::PoincareCheck);
        CHECK(command_name(Command::PoleFamily) == "pole-family");
        CHECK_THROWS_AS(parse_command("plot"), InvalidArgument);
        CHECK(parse_format("csv") == OutputFormat::Csv);
        CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
    }

    TEST_CASE("digits_matched is floor(-log10 rel_err)") {
        CHECK(digits_matched(BigReal::from_string("2.5e-13", 128), 256) == 12);
        CHECK(digits_matched(BigReal::from_string("1e-7", 256), 256) == 7);
        CHECK(digits_matched(BigReal::from_string("0.5", 128), 256) == 0);
        CHECK(digits_matched(BigReal(0L, 128), 256) == decimal_digits_for(256));
    }

    TEST_CASE("oracle report") {
        RunConfig cfg = base(Command::Oracle, "1/E4");
        cfg.n_to = 2;
        CommandResult r = run_command(cfg);
        CHECK(r.exit_code == kExitOk);
        REQUIRE(r.report["records"].size() == 3);
        CHECK(r.report["records"][2]["value"] == "55440");
        CHECK(r.report["records"][1]["value"] == "-240");
        cfg.target = "E4^2/E6^2";
        cfg.n_to = 0;
        CHECK(run_command(cfg).report["records"][0]["value"] == "1");
    }

    TEST_CASE("unknown target and bad ranges give usage errors") {
        CommandResult r = run_command(base(Command::Compare, "E8/E4"));
        CHECK(r.exit_code == kExitUsage);
        CHECK(r.report["status"] == "error");
        CHECK(r.report["error"]["kind"] == "usage");
        RunConfig cfg = base(Command::Oracle, "1/E4");
        cfg.n_from = 5;
        cfg.n_to = 2;
        CHECK(run_command(cfg).exit_code == kExitUsage);
        CHECK(run_command(base(Command::Oracle, nullptr)).exit_code == kExitUsage);
    }

    TEST_CASE("compare: records, tolerance and digits consistency") {
        RunConfig cfg = base(Command::Compare, "1/E6");
        cfg.n_to = 4;
        cfg.cutoff = 10000;
        CommandResult r = run_command(cfg);
        CHECK(r.exit_code == kExitOk);
        for (const auto& rec : r.report["records"]) {
            BigReal rel = BigReal::from_string(rec["rel_err"].get<std::string>(), 64);
            CHECK(rec["digits_matched"].get<int>() == digits_matched(rel, 256));
            CHECK(rec["formula"].is_string());
            CHECK(rec["oracle"].is_string());
        }
        cfg.tolerance = 1e-60;
        CommandResult strict = run_command(cfg);
        CHECK(strict.exit_code == kExitTolerance);
        CHECK(strict.report["records"].size() == 5);
    }

    TEST_CASE("convergence ladder starts at 1 and digits are nondecreasing") {
        RunConfig cfg = base(Command::Convergence, "1/E4");
        cfg.n_from = cfg.n_to = 15;
        cfg.cutoff = 100;
        CommandResult r = run_command(cfg);
        CHECK(r.exit_code == kExitOk);
        const auto& recs = r.report["records"];
        REQUIRE(recs.size() == 8);  // 1..64 and 100
        CHECK(recs[0]["cutoff"] == 1);
        CHECK(recs[7]["cutoff"] == 100);
        CHECK(recs[0]["oracle_digits"] == 36);
        int prev = -1;
        for (const auto& rec : recs) {
            int d = rec["digits_matched"].get<int>();
            CHECK(d >= prev);
            prev = d;
        }
    }

    TEST_CASE("pole-family refusal and success") {
        RunConfig cfg = base(Command::PoleFamily, nullptr);
        cfg.tau0 = "i";
        CommandResult r = run_command(cfg);
        CHECK(r.exit_code == kExitDomain);
        CHECK(r.report["error"]["kind"] == "domain");
        cfg.tau0 = "1/2+3i";
        cfg.n_to = 0;
        cfg.cutoff = 200;
        cfg.precision_bits = 96;
        CommandResult ok = run_command(cfg);
        CHECK(ok.report["records"].size() == 1);
        CHECK(ok.exit_code != kExitDomain);
        CHECK(run_command(base(Command::PoleFamily, nullptr)).exit_code == kExitUsage);
    }

    TEST_CASE("poincare-check errors") {
        RunConfig cfg = base(Command::PoincareCheck, "residue_H6");
        cfg.samples = "";
        CHECK(run_command(cfg).exit_code == kExitUsage);
        cfg.samples = "1,2,3";
        CHECK(run_command(cfg).exit_code == kExitUsage);
        CHECK(run_command(base(Command::PoincareCheck, "unknown_identity")).exit_code == kExitUsage);
    }

    TEST_CASE("poincare-check with explicit samples") {
        RunConfig cfg = base(Command::PoincareCheck, "decay_H12");
        cfg.samples = "1/5,6/5,0,3/2";
        cfg.box_bound = 12;
        cfg.precision_bits = 96;
        CommandResult r = run_command(cfg);
        CHECK(r.exit_code == kExitOk);
        CHECK(r.report["records"][0]["pass"] == true);
    }

    TEST_CASE("identical configs give identical reports") {
        RunConfig cfg = base(Command::Compare, "E2/E4");
        cfg.n_to = 3;
        cfg.cutoff = 1500;
        auto a = strip_time(run_command(cfg).report);
        cfg.threads = 1;
        auto b = strip_time(run_command(cfg).report);
        CHECK(a.dump() == b.dump());
    }

    TEST_CASE("csv and text rendering") {
        RunConfig cfg = base(Command::Oracle, "1/E6");
        cfg.n_to = 2;
        CommandResult r = run_command(cfg);
        CHECK(render(r.report, OutputFormat::Csv) == "n,value\n0,1\n1,504\n2,270648\n");
        std::string text = render(r.report, OutputFormat::Text);
        CHECK(text.rfind("oracle: ok", 0) == 0);
        CHECK(text.find("value=270648") != std::string::npos);
        CHECK(render(r.report, OutputFormat::Json).find("\"schema_version\": \"1.0.0\"") != std::string::npos);
    }
}
