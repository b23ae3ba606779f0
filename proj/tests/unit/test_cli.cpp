#include "reducts/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using reducts::cli::run;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "reducts");
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

// Splits a shell-style command line: whitespace separated, with single or
// double quotes grouping.
std::vector<std::string> split_command(const std::string& line) {
  std::vector<std::string> words;
  std::string word;
  bool in_word = false;
  char quote = 0;
  for (char ch : line) {
    if (quote != 0) {
      if (ch == quote) {
        quote = 0;
      } else {
        word += ch;
      }
    } else if (ch == '"' || ch == '\'') {
      quote = ch;
      in_word = true;
    } else if (ch == ' ') {
      if (in_word) {
        words.push_back(word);
        word.clear();
        in_word = false;
      }
    } else {
      word += ch;
      in_word = true;
    }
  }
  if (in_word) {
    words.push_back(word);
  }
  return words;
}

struct Example {
  std::string command;
  std::string expected;
  int status = 0;
};

// Console blocks of the usage guide: "$ reducts ..." lines, then the
// expected output (stdout followed by stderr), then an optional "[exit N]".
std::vector<Example> usage_examples() {
  std::ifstream in(REDUCTS_USAGE_DOC);
  REQUIRE(in.good());
  std::vector<Example> out;
  std::string line;
  bool in_block = false;
  while (std::getline(in, line)) {
    if (!in_block) {
      in_block = line == "```console";
      continue;
    }
    if (line == "```") {
      in_block = false;
    } else if (line.rfind("$ reducts", 0) == 0) {
      out.push_back({line.substr(2), "", 0});
    } else if (line.rfind("[exit ", 0) == 0) {
      out.back().status = std::stoi(line.substr(6));
    } else if (!out.empty()) {
      out.back().expected += line + "\n";
    }
  }
  return out;
}

} // namespace

TEST_CASE("usage guide examples are golden") {
  const auto examples = usage_examples();
  CHECK(examples.size() >= 10);
  for (const auto& ex : examples) {
    auto words = split_command(ex.command);
    words.erase(words.begin());
    const Outcome o = call(words);
    INFO(ex.command);
    CHECK(o.status == ex.status);
    CHECK(o.out + o.err == ex.expected);
  }
}

TEST_CASE("classify, compare and stabilizer one-liners") {
  CHECK(call({"classify", "median(x,y,z)"}).out == "MEDIAN — median class (Aut(M)=T⋊Aut(BA))\n");
  CHECK(call({"compare", "-a", "x ^ y ^ z ^ 1", "-b", "x ^ y ^ z"}).out ==
        "first strictly defines second\n");
  CHECK(call({"stabilizer", "-n", "3", "-t", "median(x,y,z)"}).out == "order 48\n");
}

TEST_CASE("exit codes") {
  CHECK(call({}).status == 2);
  CHECK(call({"frobnicate"}).status == 2);
  CHECK(call({"classify"}).status == 2);
  CHECK(call({"compare", "-a", "x"}).status == 2);
  CHECK(call({"stabilizer", "-n", "9", "-t", "x"}).status == 2);
  CHECK(call({"--format", "xml", "lattice"}).status == 2);
  CHECK(call({"--help"}).status == 0);
  const Outcome bad = call({"normalize", "x & (y"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("x & (y") != std::string::npos);
  const Outcome vars = call({"--vars", "x", "normalize", "x & y"});
  CHECK(vars.status == 1);
  CHECK(vars.err.find("x & y") != std::string::npos);
  const Outcome big = call({"stabilizer", "-n", "4", "--method", "exhaustive", "-t", "x"});
  CHECK(big.status == 1);
  CHECK(big.err.find("'x'") != std::string::npos);
  CHECK(call({"stabilizer", "-n", "3", "--max-work", "5", "-t", "x"}).status == 1);
}

TEST_CASE("json output is one self-describing document") {
  const Outcome o = call({"--format", "json", "classify", "--trace", "x & y ^ x"});
  REQUIRE(o.status == 0);
  const auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["schema"] == reducts::cli::kSchema);
  CHECK(doc["command"] == "classify");
  CHECK(doc["class"]["id"] == "BA");
  CHECK(doc["traces"][0]["steps"][0]["kind"] == "binary-identity");
  CHECK(doc["traces"][0]["steps"][0]["identity"] == "f(x,f(x,y))");

  const auto n = nlohmann::json::parse(call({"--format", "json", "normalize", "x | y"}).out);
  CHECK(n["results"][0]["anf"]["vars"] == nlohmann::json::array({"x", "y"}));
  CHECK(n["results"][0]["anf"]["monomials"] == nlohmann::json::parse("[[0],[1],[0,1]]"));

  const auto s = nlohmann::json::parse(
      call({"--format", "json", "stabilizer", "-n", "2", "--elements", "-t", "x & y"}).out);
  CHECK(s["order"] == 2);
  CHECK(s["elements"].size() == 2);

  const auto l = nlohmann::json::parse(call({"--format", "json", "lattice"}).out);
  CHECK(l["nodes"].size() == 13);
  CHECK(l["covers"].size() == 21);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--format", "json", "classify", "--trace",
                                      "median(a,b,c) ^ a & b & d"};
  CHECK(call(args).out == call(args).out);
}
