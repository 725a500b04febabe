#include "wlplab/spec_parser.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace wlplab {

namespace {

struct KindName {
  FamilyKind kind;
  std::string_view name;
  std::size_t arity;
};

constexpr KindName kKinds[] = {
    {FamilyKind::Path, "path", 1},         {FamilyKind::Cycle, "cycle", 1},
    {FamilyKind::Pan, "pan", 1},           {FamilyKind::Ce, "ce", 1},
    {FamilyKind::Tadpole3, "tadpole", 2},  {FamilyKind::Complete, "complete", 1},
    {FamilyKind::Empty, "empty", 1},       {FamilyKind::Bk, "bk", 2},
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FamilySpec parse_top() {
    auto spec = parse(false);
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SpecSyntaxError(what, pos_); }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view word() {
    auto start = pos_;
    while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long number() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a non-negative integer");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int d = text_[pos_] - '0';
      if (value > (std::numeric_limits<long>::max() - d) / 10) fail("integer too large");
      value = value * 10 + d;
      ++pos_;
    }
    return value;
  }

  FamilySpec parse(bool nested) {
    const auto start = pos_;
    auto name = word();
    if (name.empty()) fail("expected a family name");
    if (name == "union") {
      expect('(');
      FamilySpec spec;
      spec.kind = FamilyKind::Union;
      spec.children.push_back(parse(true));
      expect(',');
      spec.children.push_back(parse(true));
      expect(')');
      return spec;
    }
    expect(':');
    if (name == "file") {
      auto begin = pos_;
      while (pos_ < text_.size() && !(nested && (text_[pos_] == ',' || text_[pos_] == ')'))) ++pos_;
      if (pos_ == begin) fail("expected a file path");
      FamilySpec spec;
      spec.kind = FamilyKind::File;
      spec.file = std::string(text_.substr(begin, pos_ - begin));
      return spec;
    }
    const KindName* kind = nullptr;
    for (const auto& k : kKinds)
      if (k.name == name) kind = &k;
    if (!kind) {
      pos_ = start;
      fail("unknown family '" + std::string(name) + "'");
    }
    FamilySpec spec;
    spec.kind = kind->kind;
    const auto params_at = pos_;
    spec.params.push_back(number());
    // a comma followed by a digit continues the parameter list
    while (pos_ + 1 < text_.size() && text_[pos_] == ',' &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      spec.params.push_back(number());
    }
    if (spec.params.size() != kind->arity)
      fail(std::string(kind->name) + " takes " + std::to_string(kind->arity) + " parameter(s)");
    if (spec.kind == FamilyKind::Tadpole3 && spec.params[0] != 3) {
      pos_ = params_at;
      fail("only tadpole:3,<n> is supported");
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view kind_name(FamilyKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.name;
  return kind == FamilyKind::Union ? "union" : "file";
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) { return Parser(text).parse_top(); }

std::string to_string(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Union:
      return "union(" + to_string(spec.children.at(0)) + "," + to_string(spec.children.at(1)) + ")";
    case FamilyKind::File:
      return "file:" + spec.file;
    default: {
      std::string out(kind_name(spec.kind));
      out += ':';
      for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.params[i]);
      }
      return out;
    }
  }
}

Graph make_family(const FamilySpec& spec) {
  auto arg = [&](std::size_t i) {
    if (i >= spec.params.size()) throw ConstraintError("missing parameter for " + to_string(spec));
    return spec.params[i];
  };
  switch (spec.kind) {
    case FamilyKind::Path: return path_graph(arg(0));
    case FamilyKind::Cycle: return cycle_graph(arg(0));
    case FamilyKind::Pan: return pan_graph(arg(0));
    case FamilyKind::Ce: return ce_graph(arg(0));
    case FamilyKind::Tadpole3:
      if (arg(0) != 3) throw ConstraintError("only tadpole:3,<n> is supported");
      return tadpole3_graph(arg(1));
    case FamilyKind::Complete: return complete_graph(arg(0));
    case FamilyKind::Empty: return empty_graph(arg(0));
    case FamilyKind::Bk: return bk_graph(arg(0), arg(1));
    case FamilyKind::Union:
      if (spec.children.size() != 2) throw ConstraintError("union takes two specs");
      return disjoint_union(make_family(spec.children[0]), make_family(spec.children[1]));
    case FamilyKind::File: {
      std::ifstream in(spec.file);
      if (!in) throw ConstraintError("cannot open edge list '" + spec.file + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      return read_edge_list(buf.str());
    }
  }
  throw ConstraintError("unhandled family kind");
}

Graph parse_spec(std::string_view text) { return make_family(parse_family_spec(text)); }

FamilySpec family(FamilyKind kind, std::vector<long> params) {
  FamilySpec s;
  s.kind = kind;
  s.params = std::move(params);
  return s;
}

FamilySpec union_of(FamilySpec a, FamilySpec b) {
  FamilySpec s;
  s.kind = FamilyKind::Union;
  s.children.push_back(std::move(a));
  s.children.push_back(std::move(b));
  return s;
}

}  // namespace wlplab
