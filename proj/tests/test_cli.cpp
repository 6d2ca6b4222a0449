#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include <json.hpp>

#include "cli_runner.hpp"

using nlohmann::json;
using cli::run;

TEST_CASE("symbol")
{
	auto r = run("symbol --p 5 --q 11 --w 3 --alpha \"[2,0,0,0]\"");
	CHECK(r.code == 0);
	CHECK(json::parse(r.out) == json{{"e", 4}});

	r = run("symbol --p 5 --q 11 --w 5 --alpha '[\"2\",\"1\",0,0]'");
	CHECK(r.code == 0);
	CHECK(json::parse(r.out)["e"] == 1);

	// degree-two ideal above 19, addressed by modulus
	r = run("symbol --p 5 --q 19 --modulus '[1,5,1]' --alpha '[2,1,0,0]'");
	CHECK(r.code == 0);
	CHECK(json::parse(r.out).contains("e"));

	CHECK(run("symbol --p 5 --q 10 --w 3 --alpha '[2,0,0,0]'").code == 1);
	CHECK(run("symbol --p 5 --q 11 --w 2 --alpha '[2,0,0,0]'").code == 1);
	CHECK(run("symbol --p 5 --q 11 --w 3 --alpha '[2,0,0]'").code == 1);
	CHECK(run("symbol --p 5 --q 11 --w 3 --alpha '[11,0,0,0]'").code == 1);
	CHECK(run("symbol --p 5 --q 11 --w 3 --alpha 'oops'").code == 1);
	CHECK(run("symbol --p 5 --q 11 --w 3 --alpha '[2,0,0,0]' --bogus 1").code == 1);
	CHECK(run("nosuchcommand").code == 1);
	CHECK(run("").code == 1);
}

TEST_CASE("split and units")
{
	auto r = run("split --p 5 --q 11");
	REQUIRE(r.code == 0);
	const json j = json::parse(r.out);
	CHECK(j["count"] == 4);
	CHECK(j["ideals"][0]["w"] == "3");
	CHECK(run("split --p 5 --q 5").code == 1);
	CHECK(run("split --p 4 --q 11").code == 1);

	r = run("units --p 5 --a 2");
	REQUIRE(r.code == 0);
	const json u = json::parse(r.out);
	CHECK(u["units"][0]["varpi"] == json{"0", "0", "1", "1"});
	CHECK(u["product_identity"] == true);
	CHECK(run("units --p 5 --a 5").code == 1);
}

TEST_CASE("regularity commands")
{
	auto r = run("irregular --p 37");
	REQUIRE(r.code == 0);
	CHECK(json::parse(r.out)["k"] == json{32});

	r = run("hminus --p 23");
	REQUIRE(r.code == 0);
	CHECK(json::parse(r.out)["h_minus"] == "3");

	r = run("vandiver --p 37 --k 32 --candidates 10");
	REQUIRE(r.code == 0);
	const json v = json::parse(r.out);
	CHECK(v["status"] == "witness");
	CHECK(v["q"] == 149);
	CHECK(v["e"] != 0);
	CHECK(run("vandiver --p 7 --k 2 --candidates 10").code == 1);
}

TEST_CASE("scan, verify, and tampering")
{
	const auto dir = std::filesystem::temp_directory_path() / ("cyclores_cli_" + std::to_string(::getpid()));
	std::filesystem::create_directories(dir);
	const std::string path = (dir / "records.jsonl").string();

	auto r = run("scan --p 5 --x 2 --y 1 --sign plus --trial-bound 1000000 --out " + path);
	REQUIRE(r.code == 0);
	CHECK(json::parse(r.out)["q"] == json{11});

	r = run("verify --in " + path);
	CHECK(r.code == 0);
	CHECK(json::parse(r.out)["ok"] == true);

	// flip one stored symbol
	std::string line;
	{
		std::ifstream f(path);
		std::getline(f, line);
	}
	json rec = json::parse(line);
	rec["symbols"]["varpi_2"] = (rec["symbols"]["varpi_2"].get<int>() + 1) % 5;
	{
		std::ofstream f(path);
		f << rec.dump() << '\n';
	}
	r = run("verify --in " + path);
	CHECK(r.code == 2);
	CHECK(json::parse(r.out)["ok"] == false);

	// records on stdout when --out is absent
	r = run("scan --p 7 --x 3 --y -1 --sign minus");
	REQUIRE(r.code == 0);
	for (std::size_t pos = 0, next; pos < r.out.size(); pos = next + 1)
	{
		next = r.out.find('\n', pos);
		CHECK(json::parse(r.out.substr(pos, next - pos))["p"] == 7);
	}

	CHECK(run("scan --p 5 --x 1 --y 1 --sign plus").code == 1);
	CHECK(run("scan --p 5 --x 2 --y 1 --sign sideways").code == 1);
	CHECK(run("verify --in " + (dir / "missing.jsonl").string()).code == 1);
	std::filesystem::remove_all(dir);
}

TEST_CASE("telescope and barlow")
{
	auto r = run("telescope --pmax 97");
	REQUIRE(r.code == 0);
	const json t = json::parse(r.out);
	CHECK(t["match"] == true);
	CHECK(t["primes"].size() == 23);

	r = run("barlow --p 5 --x 31 --y 1 --z 2");
	REQUIRE(r.code == 0);
	CHECK(json::parse(r.out)["checks"][0]["holds"] == true);
	CHECK(run("barlow --p 5 --x 0 --y 1 --z 2").code == 1);
}

TEST_CASE("jobs setting does not change output")
{
	const auto a = run("scan --p 11 --x 10 --y 1 --sign plus --jobs 1");
	const auto b = run("scan --p 11 --x 10 --y 1 --sign plus --jobs 4");
	const auto c = run("scan --p 11 --x 10 --y 1 --sign plus", "CYCLORES_JOBS=3");
	CHECK(a.code == 0);
	CHECK(a.out == b.out);
	CHECK(a.out == c.out);
}
