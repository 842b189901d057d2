#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace distlearn {

inline constexpr const char* kDefaultMnistMirror = "https://ossci-datasets.s3.amazonaws.com/mnist/";

struct ManifestEntry {
  std::string name;    // canonical file name without ".gz"
  std::string sha256;  // digest of the uncompressed IDX bytes
};

const std::vector<ManifestEntry>& mnist_manifest();

// Any URL libcurl understands, file:// included. Throws kNetwork.
std::vector<std::uint8_t> download(const std::string& url);

struct FetchOptions {
  std::filesystem::path data_dir = "data/mnist";
  std::string mirror = kDefaultMnistMirror;  // "<mirror><name>.gz" is requested
  bool force = false;
  std::function<void(const std::string&)> log;
};

struct FetchReport {
  std::vector<std::string> already_present;
  std::vector<std::string> downloaded;
};

// Files that already verify are left alone, so a complete directory needs no
// network. A digest mismatch throws kChecksum naming both digests and leaves
// no file behind.
FetchReport fetch_mnist(const FetchOptions& options);

// Digest of the decompressed content of `path`.
std::string file_content_digest(const std::filesystem::path& path);

}  // namespace distlearn
