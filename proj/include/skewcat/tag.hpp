#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace skewcat {

/// Structured element label. Elements of fibred sets carry tags recording how
/// they were built (which summand, which factors), so canonical comparison maps
/// can be computed by decoding tags rather than asserted.
///
/// A tag is a number, an atom (short string), or a tuple of tags. Copies are
/// cheap: tuples and atoms share their payload.
class Tag {
 public:
  enum class Kind : std::uint8_t { Number, Atom, Tuple };

  Tag() = default;  // the number 0

  static Tag number(std::int64_t n);
  static Tag atom(std::string_view text);
  static Tag tuple(std::vector<Tag> parts);
  static Tag tuple(std::initializer_list<Tag> parts) { return tuple(std::vector<Tag>(parts)); }

  Kind kind() const { return kind_; }
  bool is_number() const { return kind_ == Kind::Number; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_tuple() const { return kind_ == Kind::Tuple; }

  std::int64_t as_number() const;
  const std::string& as_atom() const;
  const std::vector<Tag>& parts() const;
  const Tag& operator[](std::size_t i) const { return parts().at(i); }
  std::size_t arity() const { return is_tuple() ? parts().size() : 0; }

  std::size_t hash() const { return hash_; }

  friend bool operator==(const Tag& a, const Tag& b);
  friend std::strong_ordering operator<=>(const Tag& a, const Tag& b);

  std::string str() const;
  nlohmann::json to_json() const;
  static Tag from_json(const nlohmann::json& j);

 private:
  struct Payload {
    std::string text;
    std::vector<Tag> parts;
  };

  static constexpr std::size_t kZeroHash = 0x51ed27ULL;

  Kind kind_ = Kind::Number;
  std::int64_t value_ = 0;
  std::size_t hash_ = kZeroHash;
  std::shared_ptr<const Payload> payload_;
};

struct TagHash {
  std::size_t operator()(const Tag& t) const noexcept { return t.hash(); }
};

}  // namespace skewcat
