#include "dex/proof.hpp"

#include <map>
#include <sstream>

#include "dex/error.hpp"
#include "lex.hpp"
#include "parse_internal.hpp"

namespace dex {

std::string to_string(const ProofVerdict& v) {
  if (v.ok) return "qed  " + (v.final ? to_string(*v.final) : std::string());
  return "rejected at step " + v.step + ": " + v.reason;
}

ProofVerdict check_proof(const Signature& sig, const ProofScript& p,
                         const std::function<void(const Judgment&)>& on_judgment) {
  Kernel kernel(sig);
  if (on_judgment) kernel.set_listener(on_judgment);
  std::map<std::string, Judgment> checked;
  for (const auto& step : p.steps) {
    if (checked.count(step.name))
      return {false, step.name, "duplicate step name", std::nullopt};
    std::vector<Judgment> premises;
    for (const auto& ref : step.premises) {
      auto it = checked.find(ref);
      if (it == checked.end())
        return {false, step.name, "unknown premise step '" + ref + "'",
                std::nullopt};
      premises.push_back(it->second);
    }
    try {
      Judgment j = kernel.apply(step.rule, premises, step.args);
      checked.emplace(step.name, std::move(j));
    } catch (const Error& e) {
      return {false, step.name, e.what(), std::nullopt};
    }
  }
  auto it = checked.find(p.qed);
  if (it == checked.end())
    return {false, p.qed, "qed refers to an unknown step", std::nullopt};
  const Equation& got = it->second.equation();
  try {
    Equation want =
        make_equation(sig, resolve_types(sig, elaborate(sig, p.goal.lhs)),
                      resolve_types(sig, elaborate(sig, p.goal.rhs)),
                      p.goal.strength);
    if (got.strength != want.strength)
      return {false, p.qed,
              "strength mismatch: goal is " +
                  std::string(want.strength == Strength::Strong ? "strong"
                                                                : "weak") +
                  ", final judgment is not",
              std::nullopt};
    if (!equal(got.lhs, want.lhs) || !equal(got.rhs, want.rhs))
      return {false, p.qed,
              "final judgment " + to_string(got) +
                  " does not match the goal " + to_string(want),
              std::nullopt};
  } catch (const Error& e) {
    return {false, p.qed, std::string("ill-formed goal: ") + e.what(),
            std::nullopt};
  }
  return {true, p.qed, "", got};
}

// --- .prf reader / writer ---------------------------------------------------

namespace {

using lex::Cursor;
using lex::Tok;

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current += ch;
    }
  }
  lines.push_back(current);
  return lines;
}

}  // namespace

ProofScript parse_proof(const Signature& sig, std::string_view text,
                        std::string title) {
  ProofScript script;
  script.title = std::move(title);
  bool have_goal = false;
  std::vector<std::string> lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    int line_no = static_cast<int>(n) + 1;
    Cursor c(lex::line_tokens(lines[n], line_no));
    if (c.done()) continue;
    std::string stmt = c.expect_ident("a statement");
    if (stmt == "goal") {
      if (have_goal) c.fail("duplicate goal");
      TermPtr lhs = parse_term_prefix(sig, c);
      Strength strength;
      if (c.accept(Tok::EqEq))
        strength = Strength::Strong;
      else if (c.accept(Tok::TildeTilde))
        strength = Strength::Weak;
      else
        c.fail("expected '==' or '~~'");
      TermPtr rhs = parse_term_prefix(sig, c);
      script.goal = Equation{std::move(lhs), std::move(rhs), strength};
      have_goal = true;
    } else if (stmt == "step") {
      ProofStep step;
      step.name = c.expect_ident("a step name");
      c.expect(Tok::Equal, "'='");
      step.rule = c.expect_ident("a rule name");
      const RuleInfo* info = Kernel::find_rule(step.rule);
      if (!info) c.fail("unknown rule '" + step.rule + "'");
      c.expect(Tok::LParen, "'('");
      for (std::size_t i = 0; i < info->args.size(); ++i) {
        if (i) c.expect(Tok::Comma, "','");
        if (info->args[i] == RuleArg::Kind::Term)
          step.args.push_back(RuleArg::of(parse_term_prefix(sig, c)));
        else
          step.args.push_back(RuleArg::of(c.expect_ident("a name")));
      }
      c.expect(Tok::RParen, "')'");
      if (c.at_ident("from")) {
        c.get();
        do {
          step.premises.push_back(c.expect_ident("a step name"));
        } while (c.accept(Tok::Comma));
      }
      script.steps.push_back(std::move(step));
    } else if (stmt == "qed") {
      if (!script.qed.empty()) c.fail("duplicate qed");
      script.qed = c.expect_ident("a step name");
    } else {
      throw ParseError("unknown statement '" + stmt + "'", line_no, 1);
    }
    if (!c.done()) c.fail("trailing input");
  }
  if (!have_goal) throw ParseError("proof file is missing its goal", 1, 1);
  if (script.qed.empty()) throw ParseError("proof file is missing qed", 1, 1);
  return script;
}

std::string print_proof(const ProofScript& p) {
  std::ostringstream out;
  out << "# " << p.title << "\n";
  out << "goal " << to_string(p.goal.lhs)
      << (p.goal.strength == Strength::Strong ? " == " : " ~~ ")
      << to_string(p.goal.rhs) << "\n";
  for (const auto& step : p.steps) {
    out << "step " << step.name << " = " << step.rule << "(";
    for (std::size_t i = 0; i < step.args.size(); ++i) {
      if (i) out << ", ";
      if (step.args[i].kind == RuleArg::Kind::Term)
        out << to_string(step.args[i].term);
      else
        out << step.args[i].name;
    }
    out << ")";
    if (!step.premises.empty()) {
      out << " from ";
      for (std::size_t i = 0; i < step.premises.size(); ++i) {
        if (i) out << ", ";
        out << step.premises[i];
      }
    }
    out << "\n";
  }
  out << "qed " << p.qed << "\n";
  return out.str();
}

}  // namespace dex
