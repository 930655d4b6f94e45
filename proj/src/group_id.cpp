#include "cliffaut/group_id.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffaut {

GroupId GroupId::gamma_bar_pair(int k, int l) {
  return GroupId(Kind::GammaBarPair, std::min(k, l), std::max(k, l));
}

namespace {

int parse_int(const std::string& text, const std::string& whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    throw std::invalid_argument("bad group parameter in '" + whole + "'");
  }
  return std::stoi(text);
}

}  // namespace

GroupId GroupId::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto no_arg = [&](GroupId g) {
    if (colon != std::string::npos) throw std::invalid_argument("group '" + head + "' takes no parameter");
    return g;
  };
  if (head == "Full" || head == "Cx") return no_arg(full());
  if (head == "Gamma") {
    if (colon == std::string::npos) return gamma();
    return gamma_grade(parse_int(arg, text));
  }
  if (head == "GammaGrade") return gamma_grade(parse_int(arg, text));
  if (head == "GammaParity") return gamma_parity(parse_int(arg, text));
  if (head == "GammaBar") return gamma_bar(parse_int(arg, text));
  if (head == "GammaBarPair") {
    if (arg.size() != 2) throw std::invalid_argument("GammaBarPair needs two digits, e.g. GammaBarPair:03");
    return gamma_bar_pair(parse_int(arg.substr(0, 1), text), parse_int(arg.substr(1, 1), text));
  }
  if (head == "P") return no_arg(p());
  if (head == "A") return no_arg(a());
  if (head == "APrime" || head == "A'") return no_arg(a_prime());
  if (head == "B") return no_arg(b());
  if (head == "BPrime" || head == "B'") return no_arg(b_prime());
  if (head == "Q") return no_arg(q());
  if (head == "QPrime" || head == "Q'") return no_arg(q_prime());
  if (head == "Lipschitz") return no_arg(lipschitz());
  if (head == "Pin") return no_arg(pin());
  if (head == "Spin") return no_arg(spin());
  throw std::invalid_argument("unknown group '" + text + "'");
}

void GroupId::validate(int n) const {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument(name() + ": " + why + " (n = " + std::to_string(n) + ")");
  };
  switch (kind_) {
    case Kind::GammaGrade:
      if (a_ < 0 || a_ > n) fail("grade out of range");
      break;
    case Kind::GammaParity:
      if (a_ != 0 && a_ != 1) fail("parity must be 0 or 1");
      break;
    case Kind::GammaBar:
      if (a_ < 0 || a_ > 3) fail("class must be in [0, 3]");
      break;
    case Kind::GammaBarPair:
      if (a_ < 0 || b_ > 3 || a_ == b_) fail("classes must be two distinct values in [0, 3]");
      break;
    default:
      break;
  }
}

bool GroupId::is_conjugation_defined() const {
  switch (kind_) {
    case Kind::GammaGrade:
    case Kind::GammaParity:
    case Kind::GammaBar:
    case Kind::GammaBarPair:
      return true;
    default:
      return false;
  }
}

std::string GroupId::name() const {
  switch (kind_) {
    case Kind::Full:
      return "C^x";
    case Kind::GammaGrade:
      return "Gamma^" + std::to_string(a_);
    case Kind::GammaParity:
      return "Gamma^(" + std::to_string(a_) + ")";
    case Kind::GammaBar:
      return "Gamma^bar" + std::to_string(a_);
    case Kind::GammaBarPair:
      return "Gamma^bar" + std::to_string(a_) + std::to_string(b_);
    case Kind::P:
      return "P";
    case Kind::A:
      return "A";
    case Kind::APrime:
      return "A'";
    case Kind::B:
      return "B";
    case Kind::BPrime:
      return "B'";
    case Kind::Q:
      return "Q";
    case Kind::QPrime:
      return "Q'";
    case Kind::Lipschitz:
      return "Lipschitz";
    case Kind::Pin:
      return "Pin";
    case Kind::Spin:
      return "Spin";
  }
  return "?";
}

std::string GroupId::cli_name() const {
  switch (kind_) {
    case Kind::Full:
      return "Full";
    case Kind::GammaGrade:
      return "GammaGrade:" + std::to_string(a_);
    case Kind::GammaParity:
      return "GammaParity:" + std::to_string(a_);
    case Kind::GammaBar:
      return "GammaBar:" + std::to_string(a_);
    case Kind::GammaBarPair:
      return "GammaBarPair:" + std::to_string(a_) + std::to_string(b_);
    case Kind::APrime:
      return "APrime";
    case Kind::BPrime:
      return "BPrime";
    case Kind::QPrime:
      return "QPrime";
    default:
      return name();
  }
}

std::vector<GroupId> catalog_groups(int n) {
  std::vector<GroupId> out{GroupId::full()};
  for (int k = 0; k <= n; ++k) out.push_back(GroupId::gamma_grade(k));
  out.push_back(GroupId::gamma_parity(0));
  out.push_back(GroupId::gamma_parity(1));
  for (int m = 0; m < 4; ++m) out.push_back(GroupId::gamma_bar(m));
  out.push_back(GroupId::gamma_bar_pair(0, 1));
  out.push_back(GroupId::gamma_bar_pair(2, 3));
  out.push_back(GroupId::gamma_bar_pair(0, 3));
  out.push_back(GroupId::gamma_bar_pair(1, 2));
  for (GroupId g : {GroupId::p(), GroupId::a(), GroupId::b(), GroupId::q(), GroupId::q_prime()}) {
    out.push_back(g);
  }
  return out;
}

}  // namespace cliffaut
