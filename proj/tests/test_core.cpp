#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "credal/error.hpp"
#include "credal/gamble.hpp"
#include "credal/random.hpp"
#include "support/fixtures.hpp"

using namespace credal;
using namespace credal::testing;

TEST_CASE("rationals parse exactly and reject floats")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-1/4") == Rational(-1, 4));
    CHECK(parse_rational("+2") == 2);
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(to_string(parse_rational("6/8")) == "3/4");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    for (const char* bad : {"0.5", "1/0", "", "1/-2", "abc", "1e3", "1/", "/2", " 1"}) {
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
}

TEST_CASE("rational arithmetic stays in lowest terms")
{
    Rational a = parse_rational("2/6") + parse_rational("1/6");
    CHECK(a.get_num() == 1);
    CHECK(a.get_den() == 2);
    CHECK(sign(Rational(-1, 3)) == -1);
}

TEST_CASE("scopes are sorted sets")
{
    Scope s{"c", "a", "b"};
    CHECK(s.ids() == std::vector<NodeId>{"a", "b", "c"});
    CHECK_THROWS_AS(Scope({"a", "a"}), ScopeError);
    CHECK(unite(Scope{"a"}, Scope{"c", "b"}) == Scope{"a", "b", "c"});
    CHECK(intersect(Scope{"a", "b"}, Scope{"b", "c"}) == Scope{"b"});
    CHECK(subtract(Scope{"a", "b"}, Scope{"b"}) == Scope{"a"});
    CHECK(Scope{"a", "b"}.includes(Scope{"b"}));
    CHECK(Scope{}.empty());
}

TEST_CASE("spaces enumerate lexicographically with the first variable most significant")
{
    Space sp({var("b", 3), var("a", 2)});
    CHECK(sp.scope() == Scope{"a", "b"});
    CHECK(sp.size() == 6);
    CHECK(sp.digits(1) == std::vector<std::size_t>{0, 1});
    CHECK(sp.digits(3) == std::vector<std::size_t>{1, 0});
    CHECK(Space{}.size() == 1);
    CHECK_THROWS_AS(Space({var("a", 2), var("a", 2)}), ScopeError);
    CHECK_THROWS_AS(Space({VariableSpace{"a", {}}}), ScopeError);
    CHECK_THROWS_AS(Space({VariableSpace{"a", {"x", "x"}}}), ScopeError);
}

TEST_CASE("index to configuration to index round-trips")
{
    Sampler sampler(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<VariableSpace> vars;
        const auto n = sampler.uniform(0, 4);
        for (std::int64_t i = 0; i < n; ++i) {
            vars.push_back(var(std::string(1, static_cast<char>('a' + i)), static_cast<std::size_t>(sampler.uniform(1, 3))));
        }
        Space sp(vars);
        for (std::size_t x = 0; x < sp.size(); ++x) {
            auto d = sp.digits(x);
            CHECK(sp.index(d) == x);
            Configuration c(sp, x);
            CHECK(Configuration::from_labels(sp, c.labels()).index() == x);
        }
    }
}

TEST_CASE("configurations restrict, merge and project")
{
    Space sp({var("a", 2), var("b", 3), var("c", 2)});
    Configuration x = config(sp, {{"a", "a1"}, {"b", "b2"}, {"c", "c0"}});
    CHECK(x.label("b") == "b2");
    CHECK(x.digit("a") == 1);
    Configuration ac = x.restrict(Scope{"a", "c"});
    CHECK(ac.scope() == Scope{"a", "c"});
    CHECK(ac.merge(x.restrict(Scope{"b"})) == x);
    CHECK(x.agrees_with(ac));
    CHECK_FALSE(x.agrees_with(config(sp, {{"a", "a0"}})));
    CHECK_THROWS_AS(ac.merge(x), ScopeError);
    CHECK(sp.project(x.index(), ac.space()) == ac.index());
    CHECK_THROWS_AS(config(sp, {{"a", "nope"}}), ScopeError);
    CHECK(to_string(ac) == "(a=a1,c=c0)");
}

TEST_CASE("gamble tables must match the space size")
{
    Space a({var("a", 2)});
    CHECK_THROWS_AS(Gamble(a, q({"1"})), DimensionError);
    CHECK(Gamble().size() == 1);
    CHECK(Gamble::constant(a, 5).table() == q({"5", "5"}));
}

TEST_CASE("cylindrical extension examples")
{
    Space a({var("a", 2)});
    Space ab({var("a", 2), var("b", 2)});
    CHECK(cylindrical_extend(gamble(a, {"1", "-1"}), ab).table() == q({"1", "1", "-1", "-1"}));
    CHECK(cylindrical_extend(Gamble::constant(Space{}, 5), a).table() == q({"5", "5"}));
    Gamble f = gamble(ab, {"1", "2", "3", "4"});
    CHECK(cylindrical_extend(f, ab) == f);
    CHECK_THROWS_AS(cylindrical_extend(f, a), ScopeError);
}

TEST_CASE("indicator examples")
{
    Space a({var("a", 2)});
    Space ab({var("a", 2), var("b", 2)});
    CHECK(indicator(Configuration(a, 0), a).table() == q({"1", "0"}));
    CHECK(indicator(Configuration(Space{}, 0), a).table() == q({"1", "1"}));
    CHECK(indicator(Configuration(a, 0), ab).table() == q({"1", "1", "0", "0"}));
    CHECK_THROWS_AS(indicator(Configuration(ab, 0), a), ScopeError);
}

TEST_CASE("pointwise operations and sign classes")
{
    Space a({var("a", 2)});
    Gamble sum = gamble(a, {"1", "-1"}) + gamble(a, {"-1", "1"});
    CHECK(sum.table() == q({"0", "0"}));
    CHECK(compare_sign(sum) == SignClass::zero);
    CHECK(compare_sign(gamble(a, {"0", "1"})) == SignClass::strictly_positive);
    CHECK(compare_sign(gamble(a, {"1", "-1"})) == SignClass::mixed);
    CHECK(compare_sign(gamble(a, {"0", "-1/2"})) == SignClass::nonpositive);
    CHECK((-gamble(a, {"1", "-2"})).table() == q({"-1", "2"}));
    CHECK(scale(Rational(1, 2), gamble(a, {"1", "-2"})).table() == q({"1/2", "-1"}));
    CHECK_THROWS_AS(scale(0, gamble(a, {"1", "1"})), Error);
    CHECK_THROWS_AS(scale(-1, gamble(a, {"1", "1"})), Error);

    // operands on different scopes meet on the union
    Space b({var("b", 2)});
    Gamble prod = gamble(a, {"1", "2"}) * gamble(b, {"3", "5"});
    CHECK(prod.scope() == Scope{"a", "b"});
    CHECK(prod.table() == q({"3", "5", "6", "10"}));
}

TEST_CASE("extension is transitive and indicators commute with extension")
{
    Sampler sampler(12);
    Space s({var("a", 2)});
    Space u({var("a", 2), var("b", 3)});
    Space w({var("a", 2), var("b", 3), var("c", 2)});
    for (int i = 0; i < 25; ++i) {
        Gamble f = sampler.gamble(s);
        CHECK(cylindrical_extend(cylindrical_extend(f, u), w) == cylindrical_extend(f, w));
        Gamble g = sampler.gamble(u);
        CHECK(cylindrical_extend(cylindrical_extend(g, u), w) == cylindrical_extend(g, w));
    }
    for (const auto& c : configurations(u)) {
        CHECK(indicator(c, w) == cylindrical_extend(indicator(c, c.space()), w));
    }
}

TEST_CASE("(f + g) - g == f exactly")
{
    Sampler sampler(13);
    Space ab({var("a", 2), var("b", 3)});
    Space bc({var("b", 3), var("c", 2)});
    Space abc = ab.unite(bc);
    for (int i = 0; i < 50; ++i) {
        Gamble f = sampler.gamble(ab);
        Gamble g = sampler.gamble(bc);
        CHECK((f + g) - g == cylindrical_extend(f, abc));
        Gamble h = sampler.gamble(ab);
        CHECK((f + h) - h == f);
    }
}

TEST_CASE("sampler is deterministic and respects sign requests")
{
    Space sp({var("a", 3), var("b", 2)});
    Sampler s1(99);
    Sampler s2(99);
    for (int i = 0; i < 30; ++i) {
        CHECK(s1.gamble(sp) == s2.gamble(sp));
        Gamble n = s1.nonpositive_gamble(sp);
        s2.nonpositive_gamble(sp);
        CHECK(compare_sign(n) == SignClass::nonpositive);
        Gamble p = s1.positive_gamble(sp);
        s2.positive_gamble(sp);
        CHECK(compare_sign(p) == SignClass::strictly_positive);
        CHECK_FALSE(s1.nonzero_gamble(sp).is_zero());
        s2.nonzero_gamble(sp);
        Rational r = s1.rational(3, 4);
        s2.rational(3, 4);
        CHECK(abs(r) <= 3);
        CHECK(r.get_den() <= 4);
    }
}
