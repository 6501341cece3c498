#include "decomatch/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "decomatch/errors.hpp"

namespace decomatch {
namespace {

void append_array(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  out += ']';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string instance_to_json(const Instance& inst) {
  std::string out = "{\"version\":1,\"speeds\":";
  append_array(out, inst.speeds);
  out += ",\"jobs\":";
  append_array(out, inst.jobs);
  out += '}';
  return out;
}

Instance instance_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw_error(errc::parse_error, std::string("invalid instance JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1)
    throw_error(errc::parse_error, "instance file must be an object with \"version\": 1");
  if (!doc.contains("speeds") || !doc["speeds"].is_array() || !doc.contains("jobs") ||
      !doc["jobs"].is_array())
    throw_error(errc::parse_error, "instance file needs \"speeds\" and \"jobs\" arrays");
  std::vector<double> speeds;
  std::vector<double> jobs;
  try {
    speeds = doc["speeds"].get<std::vector<double>>();
    jobs = doc["jobs"].get<std::vector<double>>();
  } catch (const std::exception& e) {
    throw_error(errc::parse_error, std::string("invalid instance JSON: ") + e.what());
  }
  return validate_instance(std::move(speeds), std::move(jobs));
}

Instance load_instance(const std::string& path) { return instance_from_json(read_text_file(path)); }

void save_instance(const Instance& inst, const std::string& path) {
  write_text_file(path, instance_to_json(inst) + "\n");
}

std::string recurrence_sidecar_json(double a, double r, double delta,
                                    const std::vector<double>& w) {
  std::string out = "{\"a\":" + format_double(a) + ",\"r\":" + format_double(r) +
                    ",\"delta\":" + format_double(delta) + ",\"w\":";
  append_array(out, w);
  out += '}';
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_error(errc::io_error, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_error(errc::io_error, "cannot write file: " + path);
  out << text;
  if (!out) throw_error(errc::io_error, "write failed: " + path);
}

}  // namespace decomatch
