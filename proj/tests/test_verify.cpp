#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gvz/fixtures.hpp"
#include "gvz/verify.hpp"

using namespace gvz;
namespace fs = std::filesystem;

namespace {

std::shared_ptr<const Group> shared(Group g) { return std::make_shared<const Group>(std::move(g)); }

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("gvz_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& file, const std::string& text) const { std::ofstream(path / file) << text; }
};

CorpusEntry entry(std::string label, Group g) {
  auto p = shared(std::move(g));
  return CorpusEntry{label, "builtin: " + label, [p] { return p; }, {}};
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("statement ids round trip") {
    CHECK(all_statements().size() == kStatementCount);
    for (auto s : all_statements()) CHECK(parse_statement(statement_id(s)) == s);
    CHECK(statement_id(Statement::TrivialInt) == "trivial-int");
    CHECK(statement_id(Statement::A) == "A");
    CHECK_FALSE(parse_statement("Z").has_value());
    CHECK(quantified_over_normal(Statement::A));
    CHECK_FALSE(quantified_over_normal(Statement::CenterInt));
    CHECK_FALSE(quantified_over_normal(Statement::GvzClassBound));
  }

  TEST_CASE("single checks") {
    const auto q8 = shared(quaternion_group(8));
    const auto z = center(*q8);
    const auto a = check_statement(Statement::A, q8, z);
    CHECK(a.hypothesis_holds);
    CHECK(a.conclusion_holds == true);
    REQUIRE(a.normal.has_value());
    CHECK(a.normal->order == 2);

    const auto f = check_statement(Statement::F, q8, z);
    CHECK(f.hypothesis_holds);
    CHECK(f.conclusion_holds == true);

    const auto d16 = shared(dihedral_group(16));
    const auto ad = check_statement(Statement::A, d16, center(*d16));
    CHECK_FALSE(ad.hypothesis_holds);
    CHECK_FALSE(ad.conclusion_holds.has_value());
    CHECK_FALSE(ad.violation());

    const auto s3 = shared(symmetric_group(3));
    const auto e = check_statement(Statement::E, s3, derived_subgroup(*s3));
    CHECK_FALSE(e.hypothesis_holds);
    CHECK_FALSE(e.substantive());

    const auto p = direct_product(symmetric_group(3), quaternion_group(8));
    const auto pg = shared(p.group);
    const auto fc = check_statement(Statement::FlatCorollary, pg, p.second);
    CHECK(fc.hypothesis_holds);
    CHECK(fc.conclusion_holds == true);

    const auto gb = check_statement(Statement::GvzClassBound, q8);
    CHECK(gb.hypothesis_holds);
    CHECK(gb.conclusion_holds == true);
    CHECK_FALSE(gb.normal.has_value());
  }

  TEST_CASE("argument errors") {
    const auto q8 = shared(quaternion_group(8));
    CHECK_THROWS_AS(check_statement(Statement::A, q8), ArgumentError);
    CHECK_THROWS_AS(check_statement(Statement::A, q8, Subgroup::trivial(8)), ArgumentError);
    CHECK_THROWS_AS(check_statement(Statement::A, q8, Subgroup::whole(8)), ArgumentError);
    const auto s3 = shared(symmetric_group(3));
    Subgroup t;
    for (std::size_t x = 1; x < 6; ++x)
      if (s3->elem_order(Elem(x)) == 2) t = generated(*s3, {Elem(x)});
    CHECK_THROWS_AS(check_statement(Statement::A, s3, t), NotNormal);
    GroupContext ctx(q8, "Q8");
    CHECK_THROWS_AS(check_statement(Statement::B, ctx, 99), ArgumentError);
  }

  TEST_CASE("builtin corpus") {
    const auto corpus = builtin_corpus();
    std::set<std::string> labels;
    for (const auto& e : corpus) labels.insert(e.label);
    CHECK(labels.size() == corpus.size());
    CHECK(labels.count("F3:2") == 1);
    CHECK(labels.count("Q8") == 1);
    CHECK(labels.count("S3xQ8") == 1);
    for (const auto& e : corpus)
      if (e.label == "F3:2") CHECK(e.load()->order() == 6);
  }

  TEST_CASE("corpus run report") {
    Corpus corpus{entry("Q8", quaternion_group(8)), entry("S3", symmetric_group(3)),
                  entry("D16", dihedral_group(16))};
    RunOptions opts;
    opts.statements = {Statement::E, Statement::A, Statement::GvzClassBound};
    opts.threads = 2;
    const auto r = run_corpus(corpus, opts);
    CHECK(r.load_errors.empty());
    CHECK(r.violations() == 0);
    CHECK(r.exit_code() == 0);
    CHECK(r.below_threshold.empty());
    for (std::size_t i = 1; i < r.records.size(); ++i) {
      const auto& a = r.records[i - 1];
      const auto& b = r.records[i];
      const auto ka = std::make_tuple(a.statement, a.group_index, a.normal ? a.normal->index : 0);
      const auto kb = std::make_tuple(b.statement, b.group_index, b.normal ? b.normal->index : 0);
      CHECK(ka < kb);
    }
    std::size_t total = 0;
    for (const auto& [s, t] : r.tallies) total += t.substantive + t.vacuous;
    CHECK(total == r.records.size());

    Corpus broken{entry("Q8", quaternion_group(8)),
                  CorpusEntry{"bad", "nowhere", []() -> std::shared_ptr<const Group> {
                                throw InvalidGroup("cannot load");
                              },
                              {}}};
    const auto rb = run_corpus(broken, opts);
    CHECK(rb.load_errors.size() == 1);
    CHECK(rb.exit_code() == 2);

    RunReport fake;
    fake.records.push_back(VerdictRecord{Statement::A, "X", 0, NormalDescriptor{1, 2}, true, false, "w"});
    CHECK(fake.violations() == 1);
    CHECK(fake.exit_code() == 1);
  }

  TEST_CASE("threshold reporting") {
    Corpus corpus{entry("S3", symmetric_group(3))};
    RunOptions opts;
    opts.statements = {Statement::E};
    opts.threads = 1;
    const auto r = run_corpus(corpus, opts);
    CHECK(r.tallies.at(Statement::E).substantive == 0);
    REQUIRE(r.below_threshold.size() == 1);
    CHECK(r.below_threshold[0] == Statement::E);
  }

  TEST_CASE("fixture ingestion") {
    const auto name = parse_fixture_name("smallgroup_128_71.grp");
    REQUIRE(name.has_value());
    CHECK(name->order == 128);
    CHECK(name->id == 71);
    CHECK_FALSE(parse_fixture_name("smallgroup_128.grp").has_value());
    CHECK_FALSE(parse_fixture_name("other.grp").has_value());

    TempDir empty("empty");
    CHECK(fixture_ingest(empty.path.string()).empty());

    std::ostringstream warn;
    CHECK(fixture_paths((empty.path / "missing").string(), &warn).empty());
    CHECK_FALSE(warn.str().empty());

    TempDir dir("ingest");
    dir.write("smallgroup_6_2.grp", write_grp(cyclic_group(6)));
    dir.write("smallgroup_4_1.grp", write_grp(cyclic_group(4)));
    dir.write("notes.txt", "ignored");
    const auto paths = fixture_paths(dir.path.string());
    REQUIRE(paths.size() == 2);
    CHECK(fs::path(paths[0]).filename() == "smallgroup_4_1.grp");
    const auto got = fixture_ingest(dir.path.string());
    REQUIRE(got.size() == 2);
    CHECK(got[0].first == "smallgroup_4_1");
    CHECK(got[1].second.order() == 6);

    dir.write("smallgroup_8_3.grp", write_grp(cyclic_group(4)));
    CHECK_THROWS_AS(load_fixture((dir.path / "smallgroup_8_3.grp").string()), InvalidGroup);
  }

  TEST_CASE("shipped fixture loads") {
    const fs::path p = fs::path(GVZ_FIXTURES_DIR) / "smallgroup_128_71.grp";
    if (!fs::exists(p)) return;
    CHECK(load_fixture(p.string()).order() == 128);
  }
}
