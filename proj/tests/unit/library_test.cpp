#include <gtest/gtest.h>

#include "common.hpp"
#include "j_instances.hpp"
#include "sctt/syntax/resolve.hpp"
#include "sctt/syntax/surface.hpp"

using namespace sctt;
using namespace sctt::library;

namespace fs = std::filesystem;

TEST(Prelude, LoadsInOrder) {
  const auto paths = prelude_paths(testkit::lib_dir());
  ASSERT_EQ(paths.size(), 9u);
  for (std::size_t i = 0; i < paths.size(); ++i) EXPECT_EQ(paths[i].filename().string(), prelude_files()[i]);
  const auto& s = testkit::library_session();
  EXPECT_EQ(s.kernel().order().size(), 58u);  // golden count
}

TEST(Prelude, MissingPathsFileBreaksDependents) {
  auto paths = prelude_paths(testkit::lib_dir());
  paths.erase(paths.begin() + 1);
  try {
    load_prelude(paths);
    FAIL();
  } catch (const LibraryError& e) {
    EXPECT_EQ(e.kind(), LibraryError::Kind::CheckFailed);
    EXPECT_NE(std::string(e.what()).find("E003"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("concat"), std::string::npos);
  }
}

TEST(Prelude, EmptyListGivesEmptyEnvironment) { EXPECT_TRUE(load_prelude({}).kernel().order().empty()); }

TEST(Library, AllItemsGreen) {
  auto report = verify_library(testkit::library_session());
  for (const auto& st : report.items) {
    EXPECT_TRUE(st.present) << st.item.name;
    EXPECT_TRUE(st.ok) << st.item.name;
  }
  EXPECT_TRUE(report.all_ok());
  std::set<std::string> tags;
  for (const auto& st : report.items) tags.insert(st.item.tag);
  EXPECT_EQ(tags.size(), 19u);  // (a) through (s)
}

TEST(Library, AxiomUsage) {
  const auto& s = testkit::library_session();
  EXPECT_TRUE(report_axiom_usage(s, "concat").empty());
  EXPECT_TRUE(report_axiom_usage(s, "inv").empty());
  EXPECT_TRUE(report_axiom_usage(s, "assoc").empty());
  EXPECT_TRUE(report_axiom_usage(s, "id_to_equiv").empty());
  EXPECT_EQ(report_axiom_usage(s, "yoneda"), (std::set<std::string>{"funext"}));
  EXPECT_TRUE(report_axiom_usage(s, "yoneda_evid_yon").empty());
  EXPECT_EQ(report_axiom_usage(s, "yoneda_yon_evid"), (std::set<std::string>{"funext"}));
  EXPECT_THROW(report_axiom_usage(s, "no_such_item"), LibraryError);
}

TEST(Library, UnexpectedAxiomUseIsReported) {
  Session s = testkit::library_session();
  // A shadow corpus where inv depends on univalence would not verify.
  Session bad;
  bad.check_source("x.stt", "postulate ua : U ; def inv : U := ua ;");
  auto report = verify_library(bad);
  bool seen = false;
  for (const auto& st : report.items)
    if (st.item.name == "inv") {
      seen = true;
      EXPECT_TRUE(st.present);
      EXPECT_FALSE(st.ok);
    }
  EXPECT_TRUE(seen);
}

TEST(Library, ManifestMatchesGolden) {
  std::string text;
  for (const auto& line : manifest(testkit::library_session())) text += line.to_string() + "\n";
  EXPECT_EQ(text, testkit::slurp(testkit::lib_dir() / "MANIFEST"));
  EXPECT_NE(text.find("yoneda 08_yoneda.stt funext\n"), std::string::npos);
}

TEST(Library, YonedaMapsAreEvidAndYon) {
  Session s = testkit::session_with("postulate A : U ; postulate is : isSegal A ; postulate a : A ; postulate b : A ;");
  const auto& k = s.kernel();
  auto term = [&](const char* src) { return syntax::resolve_term(*syntax::parse_term(syntax::tokenize(src)), k.scope()); };
  kernel::TeleContext root;
  auto ty = k.eval(root.env(), term("hom A a b -> (x : A) -> hom A x a -> hom A x b"));
  EXPECT_TRUE(k.conv(root, ty, k.eval(root.env(), term("first (yoneda A is a b)")), k.eval(root.env(), term("yon A is a b"))));
  EXPECT_FALSE(k.conv(root, ty, k.eval(root.env(), term("first (yoneda A is a b)")),
                      k.eval(root.env(), term("\\f x g -> comp A is x a b f (comp A is x a a (idarr A a) g)"))));
}

TEST(Library, DefinitionalRightUnit) {
  auto s = testkit::session_with(testkit::slurp(testkit::source_dir() / "tests/corpus/j_context.stt"));
  for (const auto& [lhs, rhs] : testkit::right_unit_instances()) EXPECT_EQ(s.normalize(lhs), s.normalize(rhs)) << lhs;
  EXPECT_NE(s.normalize("concat T a a b refl p"), s.normalize("p"));
}

TEST(Library, JComputation) {
  auto ctx = testkit::slurp(testkit::source_dir() / "tests/corpus/j_context.stt");
  std::string checks;
  for (const auto& j : testkit::j_instances()) checks += j.as_check() + "\n";
  std::vector<Diagnostic> d;
  testkit::session_with(ctx + checks, &d);
  for (const auto& e : d) ADD_FAILURE() << e.message;
  EXPECT_EQ(testkit::j_instances().size(), 20u);
}

TEST(Library, SegalComposition) {
  std::vector<Diagnostic> d;
  testkit::session_with(testkit::slurp(testkit::source_dir() / "tests/corpus/segal_context.stt"), &d);
  EXPECT_TRUE(d.empty());
  testkit::session_with(testkit::slurp(testkit::source_dir() / "tests/corpus/segal_without_hypothesis.stt"), &d);
  ASSERT_EQ(d.size(), 2u);
  for (const auto& e : d) EXPECT_EQ(e.code, ErrorCode::TypeMismatch);
}
