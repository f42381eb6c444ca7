// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>

#include <openssl/evp.h>

#include "json.hpp"

#include "regenboot/error.hpp"

namespace regenboot {

namespace {

struct DigestContext {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx{EVP_MD_CTX_new(), &EVP_MD_CTX_free};

  DigestContext() {
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
      throw Error("SHA-256 initialization failed");
    }
  }
  void update(const void* data, std::size_t len) {
    if (EVP_DigestUpdate(ctx.get(), data, len) != 1) throw Error("SHA-256 update failed");
  }
  std::string hex() {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) throw Error("SHA-256 final failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
      out += kHex[digest[i] >> 4];
      out += kHex[digest[i] & 0xF];
    }
    return out;
  }
};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  DigestContext d;
  d.update(bytes.data(), bytes.size());
  return d.hex();
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError(path.string(), "cannot open for hashing");
  DigestContext d;
  char buf[1 << 16];
  while (is) {
    is.read(buf, sizeof(buf));
    const auto got = is.gcount();
    if (got > 0) d.update(buf, static_cast<std::size_t>(got));
  }
  if (is.bad()) throw IoError(path.string(), "read failed while hashing");
  return d.hex();
}

void record_output(RunManifest& manifest, const std::filesystem::path& out_dir,
                   const std::string& relative) {
  const auto full = out_dir / relative;
  manifest.outputs.push_back({relative, sha256_file(full), std::filesystem::file_size(full)});
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string manifest_to_json(const RunManifest& m) {
  using nlohmann::json;
  json doc;
  doc["master_seed"] = m.master_seed;
  doc["experiment"] = m.experiment;
  doc["config"] = json::parse(m.config_json.empty() ? "{}" : m.config_json);
  doc["tool_version"] = m.tool_version;
  doc["started_at"] = m.started_at;
  doc["finished_at"] = m.finished_at;
  doc["generator"] = "philox4x64-10";
  json outputs = json::array();
  for (const auto& e : m.outputs) {
    outputs.push_back({{"path", e.path}, {"sha256", e.sha256}, {"bytes", e.bytes}});
  }
  doc["outputs"] = outputs;
  json roots = json::object();
  for (const auto& [k, v] : m.seed_roots) roots[k] = v;
  doc["seed_roots"] = roots;
  json results = json::object();
  for (const auto& [k, v] : m.results) results[k] = v;
  doc["results"] = results;
  return doc.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  const std::string text = manifest_to_json(manifest);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError(tmp.string(), "cannot open for writing");
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!os) throw IoError(tmp.string(), "write failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError(path.string(), "rename failed: " + ec.message());
}

}  // namespace regenboot
