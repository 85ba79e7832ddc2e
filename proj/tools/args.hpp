#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sdw/error.hpp"

namespace sdw::cli {

/// Minimal option reader: positionals plus --key value options and --flag
/// booleans (flags must be declared). Unknown options are errors.
class Args {
 public:
  Args(const std::vector<std::string>& raw, const std::set<std::string>& flags,
       const std::set<std::string>& valued) {
    for (size_t i = 0; i < raw.size(); ++i) {
      const std::string& a = raw[i];
      if (a.rfind("--", 0) == 0) {
        std::string key = a.substr(2);
        if (flags.count(key)) {
          flags_.insert(key);
        } else if (valued.count(key)) {
          if (i + 1 >= raw.size()) throw InputError("option --" + key + " needs a value");
          auto [it, fresh] = values_.emplace(key, raw[++i]);
          if (!fresh) it->second = raw[i];
          lists_[key].push_back(raw[i]);
        } else {
          throw InputError("unknown option --" + key);
        }
      } else {
        positional_.push_back(a);
      }
    }
  }

  const std::vector<std::string>& positional() const { return positional_; }
  const std::string& pos(size_t i, const std::string& what) const {
    if (i >= positional_.size()) throw InputError("missing argument: " + what);
    return positional_[i];
  }
  bool flag(const std::string& key) const { return flags_.count(key) > 0; }
  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::string value(const std::string& key, const std::string& fallback = "") const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }
  std::string require(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw InputError("missing required option --" + key);
    return it->second;
  }
  /// All occurrences of a repeatable option.
  std::vector<std::string> all(const std::string& key) const {
    auto it = lists_.find(key);
    return it == lists_.end() ? std::vector<std::string>{} : it->second;
  }
  long long int_value(const std::string& key, long long fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : std::stoll(it->second);
  }

 private:
  std::vector<std::string> positional_;
  std::set<std::string> flags_;
  std::map<std::string, std::string> values_;
  std::map<std::string, std::vector<std::string>> lists_;
};

}  // namespace sdw::cli
