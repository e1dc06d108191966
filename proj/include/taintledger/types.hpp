#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace taintledger {

// Balances and impurity amounts are exact non-negative integers in base
// units (1 coin = 10^18 base units). Products of two amounts need 512 bits.
using Amount = boost::multiprecision::uint256_t;
using WideAmount = boost::multiprecision::uint512_t;
using Rational = boost::multiprecision::cpp_rational;

inline const Amount kCoin = Amount("1000000000000000000");

inline Amount coins(std::uint64_t n) { return Amount(n) * kCoin; }

// ---------------------------------------------------------------------------
// Errors. Each carries a stable machine-readable kind for CLI reporting.

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define TL_DEFINE_ERROR(name)                                 \
  class name : public Error {                                 \
   public:                                                    \
    explicit name(const std::string& msg) : Error(#name, msg) {} \
  }

TL_DEFINE_ERROR(ParseError);
TL_DEFINE_ERROR(ValidationError);
TL_DEFINE_ERROR(InvalidChainData);
TL_DEFINE_ERROR(StreamOrderError);
TL_DEFINE_ERROR(ConfigError);
TL_DEFINE_ERROR(StoreClosed);
TL_DEFINE_ERROR(StoreError);
TL_DEFINE_ERROR(FutureBlockError);
TL_DEFINE_ERROR(SeedNotFound);
TL_DEFINE_ERROR(UnsupportedScheme);
TL_DEFINE_ERROR(PayloadError);
TL_DEFINE_ERROR(DescriptorError);

#undef TL_DEFINE_ERROR

// ---------------------------------------------------------------------------
// Address: 20 raw bytes, canonical text form 0x + 40 lowercase hex digits.

struct Address {
  std::array<std::uint8_t, 20> bytes{};

  auto operator<=>(const Address&) const = default;

  std::string to_hex() const;
  static Address from_hex(std::string_view text);

  // Deterministic synthetic address: tag byte up front, big-endian index in
  // the trailing 8 bytes. Used by the generator and tests.
  static Address from_index(std::uint64_t index, char tag = 'a');
};

struct AddressHash {
  std::size_t operator()(const Address& a) const {
    // FNV-1a over the 20 bytes.
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t b : a.bytes) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// ---------------------------------------------------------------------------
// Amount / score helpers.

// Exact ceil(value * num / den) with a 512-bit intermediate product.
// den == 0 is only reachable for the zero-balance no-op case and yields 0.
Amount mul_div_ceil(const Amount& value, const Amount& num, const Amount& den);

// Parses a non-negative decimal integer in base units.
Amount amount_from_decimal(std::string_view text);

// Parses a coin-denominated decimal ("0.5" -> 5*10^17) exactly; at most 18
// fractional digits.
Amount amount_from_coins(std::string_view text);

// A small exact rational in [0, 1] used for thresholds.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  auto operator<=>(const Ratio&) const = default;

  static Ratio from_decimal(std::string_view text);  // "0.05" -> 5/100
  std::string to_decimal(int places = 6) const;
};

// score >= / > ratio comparisons on the exact (I, B) pair; score is 0 when
// balance is 0.
bool score_at_least(const Amount& impurity, const Amount& balance, const Ratio& phi);
bool score_greater(const Amount& impurity, const Amount& balance, const Ratio& phi);

// Fixed-point decimal rendering of I/B, truncated at `places` digits.
std::string score_decimal(const Amount& impurity, const Amount& balance, int places = 6);

// ---------------------------------------------------------------------------
// Impurity record: the exact pair (I, B); the score is always derived.

struct ImpurityRecord {
  Amount impurity{};
  Amount balance{};

  bool operator==(const ImpurityRecord&) const = default;
};

Rational score(const ImpurityRecord& record);

inline bool score_at_least(const ImpurityRecord& r, const Ratio& phi) {
  return score_at_least(r.impurity, r.balance, phi);
}
inline bool score_greater(const ImpurityRecord& r, const Ratio& phi) {
  return score_greater(r.impurity, r.balance, phi);
}

// ---------------------------------------------------------------------------
// Balance-changing operations and blocks.

enum class OpKind { Transfer, Fee, Reward };

std::string_view op_kind_name(OpKind kind);
OpKind op_kind_from_name(std::string_view name);

struct BalanceOp {
  OpKind kind = OpKind::Transfer;
  std::optional<Address> from;
  Address to{};
  Amount sent{};
  Amount received{};

  static BalanceOp transfer(const Address& from, const Address& to, const Amount& amount);
  static BalanceOp fee(const Address& from, const Address& producer, const Amount& sent,
                       const Amount& received);
  static BalanceOp reward(const Address& to, const Amount& amount);

  // Throws InvalidChainData naming the violated invariant.
  void validate() const;

  bool is_zero_value() const { return sent == 0 && received == 0; }
};

struct Block {
  std::uint64_t number = 0;
  Address producer{};
  std::vector<BalanceOp> ops;
};

// ---------------------------------------------------------------------------
// Sanction set with activation (and optional deactivation) heights.

struct SanctionEntry {
  Address address{};
  std::uint64_t active_from = 0;
  std::optional<std::uint64_t> active_until;  // active while block < active_until
};

class SanctionSet {
 public:
  SanctionSet() = default;

  void add(const SanctionEntry& entry);
  void add(const Address& address, std::uint64_t active_from,
           std::optional<std::uint64_t> active_until = std::nullopt);

  bool active_at(const Address& address, std::uint64_t block) const;
  bool listed(const Address& address) const;  // has any entry, active or not
  // Addresses whose sanction deactivates exactly at `block`.
  std::vector<Address> delisted_at(std::uint64_t block) const;

  const std::vector<SanctionEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<SanctionEntry> entries_;
  std::unordered_map<Address, std::vector<std::size_t>, AddressHash> by_address_;
};

}  // namespace taintledger
