#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dcreid/signature.hpp"

namespace dcreid {

struct ManifestEntry {
  std::string id;
  char camera = 'A';  // 'A' or 'B'
  std::string image_path;
  std::string mask_path;  // empty = no mask, whole image is foreground
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
};

struct ScanReport {
  DatasetManifest manifest;
  std::vector<std::string> unpaired;  // files without a cross-camera partner
};

/// Walks root/cam_a and root/cam_b, pairing identities by the leading digits
/// of the filename. Unpaired files are reported and excluded.
ScanReport scan_viper_layout(const std::filesystem::path& root);

/// CSV with header "id,camera,image_path,mask_path"; relative paths resolve
/// against the manifest's directory.
DatasetManifest load_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const DatasetManifest& manifest);

inline constexpr int kSignatureFileVersion = 1;

struct SignatureFile {
  int version = kSignatureFileVersion;
  ExtractionParams params;
  std::vector<PersonSignature> signatures;
};

/// JSON persistence. Percentages are written at full double precision;
/// normalized region stats are recomputed on load from MBR + image size.
void write_signature_file(const std::filesystem::path& path, const SignatureFile& file);
SignatureFile read_signature_file(const std::filesystem::path& path);

std::string signature_file_to_json(const SignatureFile& file);
SignatureFile signature_file_from_json(const std::string& text);

}  // namespace dcreid
