#include "skewcat/tag.hpp"

#include <functional>
#include <stdexcept>

namespace skewcat {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  // boost::hash_combine constant, widened
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Tag Tag::number(std::int64_t n) {
  Tag t;
  t.kind_ = Kind::Number;
  t.value_ = n;
  t.hash_ = n == 0 ? kZeroHash : mix(kZeroHash, static_cast<std::size_t>(n));
  t.payload_.reset();
  return t;
}

Tag Tag::atom(std::string_view text) {
  Tag t;
  t.kind_ = Kind::Atom;
  t.value_ = 0;
  t.hash_ = mix(0xa70eULL, std::hash<std::string_view>{}(text));
  t.payload_ = std::make_shared<const Payload>(Payload{std::string(text), {}});
  return t;
}

Tag Tag::tuple(std::vector<Tag> parts) {
  Tag t;
  t.kind_ = Kind::Tuple;
  std::size_t h = 0x7a9ULL + parts.size();
  for (const auto& p : parts) h = mix(h, p.hash_);
  t.value_ = static_cast<std::int64_t>(parts.size());
  t.hash_ = h;
  t.payload_ = std::make_shared<const Payload>(Payload{{}, std::move(parts)});
  return t;
}

std::int64_t Tag::as_number() const {
  if (!is_number()) throw std::logic_error("tag is not a number: " + str());
  return value_;
}

const std::string& Tag::as_atom() const {
  if (!is_atom()) throw std::logic_error("tag is not an atom: " + str());
  return payload_->text;
}

const std::vector<Tag>& Tag::parts() const {
  if (!is_tuple()) throw std::logic_error("tag is not a tuple: " + str());
  return payload_->parts;
}

bool operator==(const Tag& a, const Tag& b) {
  if (a.kind_ != b.kind_ || a.hash_ != b.hash_ || a.value_ != b.value_) return false;
  if (a.payload_ == b.payload_) return true;
  switch (a.kind_) {
    case Tag::Kind::Number:
      return true;
    case Tag::Kind::Atom:
      return a.payload_->text == b.payload_->text;
    case Tag::Kind::Tuple:
      return a.payload_->parts == b.payload_->parts;
  }
  return false;
}

std::strong_ordering operator<=>(const Tag& a, const Tag& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case Tag::Kind::Number:
      return a.value_ <=> b.value_;
    case Tag::Kind::Atom:
      return a.payload_->text.compare(b.payload_->text) <=> 0;
    case Tag::Kind::Tuple: {
      const auto& x = a.payload_->parts;
      const auto& y = b.payload_->parts;
      for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        auto c = x[i] <=> y[i];
        if (c != 0) return c;
      }
      return x.size() <=> y.size();
    }
  }
  return std::strong_ordering::equal;
}

std::string Tag::str() const {
  switch (kind_) {
    case Kind::Number:
      return std::to_string(value_);
    case Kind::Atom:
      return payload_->text;
    case Kind::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < payload_->parts.size(); ++i) {
        if (i) out += ",";
        out += payload_->parts[i].str();
      }
      return out + ")";
    }
  }
  return {};
}

nlohmann::json Tag::to_json() const {
  switch (kind_) {
    case Kind::Number:
      return value_;
    case Kind::Atom:
      return payload_->text;
    case Kind::Tuple: {
      auto arr = nlohmann::json::array();
      for (const auto& p : payload_->parts) arr.push_back(p.to_json());
      return arr;
    }
  }
  return nullptr;
}

Tag Tag::from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return number(j.get<std::int64_t>());
  if (j.is_string()) return atom(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Tag> parts;
    for (const auto& e : j) parts.push_back(from_json(e));
    return tuple(std::move(parts));
  }
  throw std::invalid_argument("not a tag: " + j.dump());
}

}  // namespace skewcat
