#include <sys/wait.h>

#include <cstdlib>
#include <string>

#include "doctest.h"
#include "symquot/tags.hpp"

using namespace symquot;

namespace {
int run(const std::string& args) {
  const std::string cmd = std::string(SYMQUOT_CLI) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}
}  // namespace

TEST_CASE("tags round trip") {
  for (const char* tag : {"cr:q=9:d=3:s=1", "tcr:q=9:d=3:s=2", "pair:group=s5:rule=all_distinct",
                          "pair:group=m22:design=s22:rule=design_in", "flag:design=ag:d=3:group=agl:d=3:rule=same_block",
                          "flag:design=h12:group=m11:rule=opposite_non_complement", "match:group=pgl2:q=8:s=1",
                          "star:pair:group=s5:rule=all_distinct", "pair:group=mgrp:q=9:s=1:rule=same_second"}) {
    CAPTURE(tag);
    CHECK(parse_tag(tag).to_string() == tag);
  }
  CHECK(parse_tag("match:group=pgl2:q=9:s=2").to_string() == "match:group=pgl2:q=9");
  const auto star = parse_tag("star:star:match:group=s4");
  CHECK(star.kind == ConstructionRequest::Kind::Star);
  REQUIRE(star.inner);
  CHECK(star.inner->kind == ConstructionRequest::Kind::Star);
}

TEST_CASE("tag errors carry positions") {
  auto pos = [](const std::string& t) -> std::size_t {
    try {
      parse_tag(t);
    } catch (const TagParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(pos("cr:q=4") == 6);
  CHECK(pos("bogus") == 0);
  CHECK(pos("pair:group=s5:rule=nope") == 19);
  CHECK(pos("cr:q=x:d=2:s=1") == 5);
  CHECK(pos("") == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("construct cr:q=3:d=2:s=1") == 0);
  CHECK(run("--json params cr:q=5:d=4:s=1") == 0);
  CHECK(run("classify --table match:group=s4") == 0);
  CHECK(run("export --format dimacs cr:q=3:d=2:s=1") == 0);
  CHECK(run("construct cr:q=4") == 2);
  CHECK(run("") == 2);
  CHECK(run("census --max-q 3 --max-d x") == 2);
  CHECK(run("construct cr:q=6:d=2:s=1") == 1);
  CHECK(run("construct match:group=a4") == 1);
  CHECK(run("selftest --criterion 1") == 0);
  CHECK(run("selftest --criterion 12") == 2);
}
