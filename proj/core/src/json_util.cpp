#include "json_util.hpp"

namespace hypcert::detail {

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    const auto tag = what.find("] ");
    if (tag != std::string::npos) what = what.substr(tag + 2);
    const auto at = what.find(": ");
    if (what.rfind("parse error", 0) == 0 && at != std::string::npos) what = what.substr(at + 2);
    throw ConfigError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

void Field::fail(const std::string& message) const {
  throw ConfigError(source_ + ": field '" + (path_.empty() ? "/" : path_) + "': " + message);
}

bool Field::has(const char* key) const { return object().contains(key); }

Field Field::at(const char* key) const {
  const auto& obj = object();
  auto it = obj.find(key);
  if (it == obj.end()) Field(*v_, source_, path_ + "/" + key).fail("missing");
  return Field(*it, source_, path_ + "/" + key);
}

Field Field::at(std::size_t index) const {
  const auto& arr = array();
  if (index >= arr.size()) fail("index " + std::to_string(index) + " out of range");
  return Field(arr[index], source_, path_ + "/" + std::to_string(index));
}

std::size_t Field::size() const { return array().size(); }

const Json& Field::object() const {
  if (!v_->is_object()) fail("expected an object");
  return *v_;
}

const Json& Field::array() const {
  if (!v_->is_array()) fail("expected an array");
  return *v_;
}

std::string Field::string() const {
  if (!v_->is_string()) fail("expected a string");
  return v_->get<std::string>();
}

bool Field::boolean() const {
  if (!v_->is_boolean()) fail("expected true or false");
  return v_->get<bool>();
}

long Field::integer() const {
  if (!v_->is_number_integer()) fail("expected an integer");
  return v_->get<long>();
}

Rational Field::rational() const {
  if (v_->is_number_integer()) return Rational(v_->get<long>());
  if (v_->is_string()) {
    try {
      return parse_rational(v_->get<std::string>());
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  fail("expected an integer or a \"num/den\" string");
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

}  // namespace hypcert::detail
