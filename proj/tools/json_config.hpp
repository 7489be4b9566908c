#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace hypermap::cli {

/// CLI11 config formatter for flat JSON objects: keys are long option
/// names, arrays feed multi-value options. Top-level keys go to the
/// subcommand parsed on the command line. A provenance file is accepted
/// too; its "config" object is used.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root = nullptr) : root_(root) {}

  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    return to_json(app, default_also).dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(input);
    } catch (const nlohmann::json::exception& ex) {
      throw CLI::ConversionError("config", ex.what());
    }
    if (j.is_object() && j.contains("command") && j.contains("config") && j["config"].is_object()) {
      j = j["config"];
    }
    std::vector<std::string> parents;
    if (root_ != nullptr) {
      const auto subs = root_->get_subcommands();
      if (!subs.empty()) parents.push_back(subs.front()->get_name());
    }
    std::vector<CLI::ConfigItem> items;
    collect(j, parents, items);
    return items;
  }

  static nlohmann::json to_json(const CLI::App* app, bool default_also) {
    nlohmann::json j = nlohmann::json::object();
    for (const CLI::Option* opt : app->get_options()) {
      const std::string name = opt->get_single_name();
      if (opt->get_lnames().empty() || name == "help" || name == "config") continue;
      std::vector<std::string> values = opt->results();
      if (values.empty()) {
        if (!default_also || opt->get_default_str().empty()) continue;
        values = {opt->get_default_str()};
        if (values[0].size() > 1 && values[0].front() == '[' && values[0].back() == ']') {
          values = CLI::detail::split(values[0].substr(1, values[0].size() - 2), ',');
        }
      }
      if (opt->get_expected_max() > 1) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : values) arr.push_back(scalar(v));
        j[name] = arr;
      } else {
        j[name] = scalar(values.back());
      }
    }
    return j;
  }

 private:
  const CLI::App* root_;

  static nlohmann::json scalar(const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    const bool negative = !v.empty() && v[0] == '-';
    const bool integral = v.size() > (negative ? 1u : 0u) &&
                          v.find_first_not_of("0123456789", negative ? 1 : 0) == std::string::npos;
    try {
      if (integral) return negative ? nlohmann::json(std::stoll(v)) : nlohmann::json(std::stoull(v));
      std::size_t used = 0;
      const double d = std::stod(v, &used);
      if (used == v.size() && std::isfinite(d)) return d;
    } catch (const std::exception&) {
    }
    return v;
  }

  static std::string text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  static void collect(const nlohmann::json& j, std::vector<std::string> parents,
                      std::vector<CLI::ConfigItem>& items) {
    if (!j.is_object()) throw CLI::ConversionError("config", "top level must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto nested = parents;
        nested.push_back(key);
        collect(value, nested, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(text(v));
      } else {
        item.inputs.push_back(text(value));
      }
      items.push_back(std::move(item));
    }
  }
};

}  // namespace hypermap::cli
