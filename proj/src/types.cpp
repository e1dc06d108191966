#include "taintledger/types.hpp"

#include <algorithm>
#include <charconv>

namespace taintledger {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

constexpr char kHexDigits[] = "0123456789abcdef";

}  // namespace

std::string Address::to_hex() const {
  std::string out;
  out.reserve(42);
  out += "0x";
  for (std::uint8_t b : bytes) {
    out += kHexDigits[b >> 4];
    out += kHexDigits[b & 0x0f];
  }
  return out;
}

Address Address::from_hex(std::string_view text) {
  if (text.size() != 42 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X'))
    throw ParseError("address must be 0x followed by 40 hex digits, got '" +
                     std::string(text) + "'");
  Address out;
  for (std::size_t i = 0; i < 20; ++i) {
    int hi = hex_digit(text[2 + 2 * i]);
    int lo = hex_digit(text[3 + 2 * i]);
    if (hi < 0 || lo < 0)
      throw ParseError("invalid hex digit in address '" + std::string(text) + "'");
    out.bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

Address Address::from_index(std::uint64_t index, char tag) {
  Address out;
  out.bytes[0] = static_cast<std::uint8_t>(tag);
  for (int i = 0; i < 8; ++i)
    out.bytes[19 - i] = static_cast<std::uint8_t>(index >> (8 * i));
  return out;
}

Amount mul_div_ceil(const Amount& value, const Amount& num, const Amount& den) {
  if (den == 0) return 0;
  WideAmount product = WideAmount(value) * WideAmount(num);
  WideAmount q = (product + (WideAmount(den) - 1)) / WideAmount(den);
  return Amount(q);
}

Amount amount_from_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty amount");
  boost::multiprecision::cpp_int acc = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ParseError("amount must be a non-negative decimal integer, got '" +
                       std::string(text) + "'");
    acc = acc * 10 + (c - '0');
  }
  if (acc > boost::multiprecision::cpp_int(~Amount(0)))
    throw ParseError("amount '" + std::string(text) + "' exceeds 256 bits");
  return Amount(acc);
}

Amount amount_from_coins(std::string_view text) {
  auto dot = text.find('.');
  std::string_view whole = dot == std::string_view::npos ? text : text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw ParseError("empty coin amount");
  if (frac.size() > 18)
    throw ParseError("coin amount '" + std::string(text) + "' has more than 18 fractional digits");
  Amount result = whole.empty() ? Amount(0) : amount_from_decimal(whole) * kCoin;
  if (!frac.empty()) {
    Amount f = amount_from_decimal(frac);
    for (std::size_t i = frac.size(); i < 18; ++i) f *= 10;
    result += f;
  }
  return result;
}

Ratio Ratio::from_decimal(std::string_view text) {
  auto dot = text.find('.');
  std::string_view whole = dot == std::string_view::npos ? text : text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw ParseError("empty ratio");
  if (frac.size() > 18) throw ParseError("ratio has more than 18 fractional digits");
  std::uint64_t num = 0;
  for (char c : whole) {
    if (c < '0' || c > '9') throw ParseError("invalid ratio '" + std::string(text) + "'");
    num = num * 10 + static_cast<std::uint64_t>(c - '0');
    if (num > 1) throw ParseError("ratio '" + std::string(text) + "' exceeds 1");
  }
  std::uint64_t den = 1;
  for (char c : frac) {
    if (c < '0' || c > '9') throw ParseError("invalid ratio '" + std::string(text) + "'");
    num = num * 10 + static_cast<std::uint64_t>(c - '0');
    den *= 10;
  }
  if (num > den) throw ParseError("ratio '" + std::string(text) + "' exceeds 1");
  return Ratio{num, den};
}

std::string Ratio::to_decimal(int places) const {
  return score_decimal(Amount(num), Amount(den), places);
}

bool score_at_least(const Amount& impurity, const Amount& balance, const Ratio& phi) {
  if (balance == 0) return phi.num == 0;  // score is exactly 0
  return WideAmount(impurity) * phi.den >= WideAmount(balance) * phi.num;
}

bool score_greater(const Amount& impurity, const Amount& balance, const Ratio& phi) {
  if (balance == 0) return false;  // 0 > phi never holds for phi in [0,1]... except phi<0, excluded
  return WideAmount(impurity) * phi.den > WideAmount(balance) * phi.num;
}

std::string score_decimal(const Amount& impurity, const Amount& balance, int places) {
  WideAmount scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  WideAmount q = 0;
  if (balance != 0) q = WideAmount(impurity) * scale / WideAmount(balance);
  std::string digits = (q % scale).str();
  std::string out = (q / scale).str();
  out += '.';
  out.append(static_cast<std::size_t>(places) - digits.size(), '0');
  out += digits;
  return out;
}

Rational score(const ImpurityRecord& record) {
  if (record.balance == 0) return Rational(0);
  return Rational(boost::multiprecision::cpp_int(record.impurity),
                  boost::multiprecision::cpp_int(record.balance));
}

std::string_view op_kind_name(OpKind kind) {
  switch (kind) {
    case OpKind::Transfer: return "transfer";
    case OpKind::Fee: return "fee";
    case OpKind::Reward: return "reward";
  }
  return "unknown";
}

OpKind op_kind_from_name(std::string_view name) {
  if (name == "transfer") return OpKind::Transfer;
  if (name == "fee") return OpKind::Fee;
  if (name == "reward") return OpKind::Reward;
  throw ParseError("unknown op kind '" + std::string(name) + "'");
}

BalanceOp BalanceOp::transfer(const Address& from, const Address& to, const Amount& amount) {
  return BalanceOp{OpKind::Transfer, from, to, amount, amount};
}

BalanceOp BalanceOp::fee(const Address& from, const Address& producer, const Amount& sent,
                         const Amount& received) {
  return BalanceOp{OpKind::Fee, from, producer, sent, received};
}

BalanceOp BalanceOp::reward(const Address& to, const Amount& amount) {
  return BalanceOp{OpKind::Reward, std::nullopt, to, Amount(0), amount};
}

void BalanceOp::validate() const {
  switch (kind) {
    case OpKind::Transfer:
      if (!from) throw InvalidChainData("transfer requires a sender");
      if (sent != received) throw InvalidChainData("transfer requires sent = received");
      break;
    case OpKind::Fee:
      if (!from) throw InvalidChainData("fee requires a sender");
      if (sent < received) throw InvalidChainData("fee requires sent >= received");
      break;
    case OpKind::Reward:
      if (from) throw InvalidChainData("reward must not carry a sender");
      if (sent != 0) throw InvalidChainData("reward requires sent = 0");
      break;
  }
}

void SanctionSet::add(const SanctionEntry& entry) {
  if (entry.active_until && *entry.active_until <= entry.active_from)
    throw ValidationError("sanction deactivation must come after activation");
  by_address_[entry.address].push_back(entries_.size());
  entries_.push_back(entry);
}

void SanctionSet::add(const Address& address, std::uint64_t active_from,
                      std::optional<std::uint64_t> active_until) {
  add(SanctionEntry{address, active_from, active_until});
}

bool SanctionSet::active_at(const Address& address, std::uint64_t block) const {
  auto it = by_address_.find(address);
  if (it == by_address_.end()) return false;
  for (std::size_t idx : it->second) {
    const SanctionEntry& e = entries_[idx];
    if (block >= e.active_from && (!e.active_until || block < *e.active_until)) return true;
  }
  return false;
}

bool SanctionSet::listed(const Address& address) const {
  return by_address_.count(address) != 0;
}

std::vector<Address> SanctionSet::delisted_at(std::uint64_t block) const {
  std::vector<Address> out;
  for (const SanctionEntry& e : entries_)
    if (e.active_until && *e.active_until == block) out.push_back(e.address);
  return out;
}

}  // namespace taintledger
