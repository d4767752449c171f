#include "dcreid/dataset_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "dcreid/errors.hpp"

namespace dcreid {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string identity_token(const std::string& filename) {
  std::string token;
  for (char c : filename) {
    if (!std::isdigit(static_cast<unsigned char>(c))) break;
    token.push_back(c);
  }
  return token;
}

std::vector<fs::path> sorted_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

ScanReport scan_viper_layout(const fs::path& root) {
  const fs::path cam_a = root / "cam_a";
  const fs::path cam_b = root / "cam_b";
  if (!fs::is_directory(cam_a) || !fs::is_directory(cam_b))
    throw IoError("dataset root must contain cam_a/ and cam_b/: " + root.string());

  std::map<std::string, fs::path> by_id_a, by_id_b;
  std::vector<std::string> bad;
  for (const auto& [dir, table] : {std::pair{cam_a, &by_id_a}, std::pair{cam_b, &by_id_b}}) {
    for (const auto& file : sorted_files(dir)) {
      const std::string id = identity_token(file.filename().string());
      if (id.empty()) {
        bad.push_back(file.string());
        continue;
      }
      table->emplace(id, file);  // first file per identity wins (single-shot)
    }
  }
  if (!bad.empty()) {
    std::string msg = "filenames without a leading identity token:";
    for (const auto& f : bad) msg += "\n  " + f;
    throw IoError(msg);
  }

  ScanReport report;
  for (const auto& [id, path] : by_id_a) {
    auto it = by_id_b.find(id);
    if (it == by_id_b.end()) {
      report.unpaired.push_back(path.string());
      continue;
    }
    report.manifest.entries.push_back({id, 'A', path.string(), ""});
    report.manifest.entries.push_back({id, 'B', it->second.string(), ""});
  }
  for (const auto& [id, path] : by_id_b)
    if (!by_id_a.count(id)) report.unpaired.push_back(path.string());
  return report;
}

DatasetManifest load_manifest(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open manifest: " + path.string());
  const fs::path base = path.parent_path();

  std::string line;
  if (!std::getline(f, line) || line != "id,camera,image_path,mask_path")
    throw IoError("manifest missing header 'id,camera,image_path,mask_path': " + path.string());

  DatasetManifest manifest;
  int line_no = 1;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() == 3) fields.push_back("");  // trailing empty mask_path
    if (fields.size() != 4 || fields[0].empty() || fields[1].size() != 1 ||
        (fields[1][0] != 'A' && fields[1][0] != 'B') || fields[2].empty())
      throw IoError("malformed manifest row at " + path.string() + ":" + std::to_string(line_no));
    auto resolve = [&](const std::string& p) {
      if (p.empty()) return p;
      fs::path fp(p);
      return fp.is_absolute() ? p : (base / fp).string();
    };
    manifest.entries.push_back({fields[0], fields[1][0], resolve(fields[2]), resolve(fields[3])});
  }
  return manifest;
}

void write_manifest(const fs::path& path, const DatasetManifest& manifest) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write manifest: " + path.string());
  f << "id,camera,image_path,mask_path\n";
  for (const auto& e : manifest.entries)
    f << e.id << ',' << e.camera << ',' << e.image_path << ',' << e.mask_path << '\n';
}

namespace {

json dcds_to_json(const DcdSet& set) {
  json arr = json::array();
  for (const auto& e : set.entries) arr.push_back({e.color, e.percentage});
  return arr;
}

DcdSet dcds_from_json(const json& arr, int max_colors) {
  DcdSet set;
  set.max_colors = max_colors;
  for (const auto& e : arr) set.entries.push_back({e.at(0).get<int>(), e.at(1).get<double>()});
  return set;
}

}  // namespace

std::string signature_file_to_json(const SignatureFile& file) {
  validate(file.params);
  const std::uint64_t fp = params_fingerprint(file.params);
  for (const auto& sig : file.signatures)
    if (sig.fingerprint != fp)
      throw IoError("signature '" + sig.id + "' does not match the file's extraction params");

  json root;
  root["version"] = file.version;
  root["params"] = {{"norm_width", file.params.norm_width},
                    {"norm_height", file.params.norm_height},
                    {"tau", file.params.tau},
                    {"max_colors", file.params.max_colors},
                    {"connectivity", file.params.connectivity},
                    {"min_area", file.params.min_area}};
  json sigs = json::array();
  for (const auto& sig : file.signatures) {
    json regions = json::array();
    for (const auto& r : sig.regions.regions)
      regions.push_back({r.color, r.part == BodyPart::Upper ? "U" : "L", r.area, r.mbr.x, r.mbr.y,
                         r.mbr.width, r.mbr.height});
    sigs.push_back({{"id", sig.id},
                    {"image_size", {sig.width, sig.height}},
                    {"upper_dcds", dcds_to_json(sig.upper_dcds)},
                    {"lower_dcds", dcds_to_json(sig.lower_dcds)},
                    {"regions", regions}});
  }
  root["signatures"] = std::move(sigs);
  return root.dump(2) + "\n";
}

SignatureFile signature_file_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("signature file is not valid JSON: ") + e.what());
  }
  try {
    SignatureFile file;
    file.version = root.at("version").get<int>();
    if (file.version != kSignatureFileVersion)
      throw IoError("unsupported signature file version " + std::to_string(file.version));
    const json& p = root.at("params");
    file.params.norm_width = p.at("norm_width").get<int>();
    file.params.norm_height = p.at("norm_height").get<int>();
    file.params.tau = p.at("tau").get<double>();
    file.params.max_colors = p.at("max_colors").get<int>();
    file.params.connectivity = p.at("connectivity").get<int>();
    file.params.min_area = p.at("min_area").get<int>();
    validate(file.params);
    const std::uint64_t fp = params_fingerprint(file.params);

    for (const json& js : root.at("signatures")) {
      PersonSignature sig;
      sig.id = js.at("id").get<std::string>();
      sig.width = js.at("image_size").at(0).get<int>();
      sig.height = js.at("image_size").at(1).get<int>();
      sig.fingerprint = fp;
      sig.upper_dcds = dcds_from_json(js.at("upper_dcds"), file.params.max_colors);
      sig.lower_dcds = dcds_from_json(js.at("lower_dcds"), file.params.max_colors);
      for (const json& jr : js.at("regions")) {
        DominantColorRegion r;
        r.color = jr.at(0).get<int>();
        const std::string part = jr.at(1).get<std::string>();
        if (part != "U" && part != "L") throw IoError("bad region part tag '" + part + "'");
        r.part = part == "U" ? BodyPart::Upper : BodyPart::Lower;
        r.area = jr.at(2).get<int>();
        r.mbr = {jr.at(3).get<int>(), jr.at(4).get<int>(), jr.at(5).get<int>(), jr.at(6).get<int>()};
        // normalized stats are derived, not stored
        r.center_y = (r.mbr.y + r.mbr.height / 2.0) / sig.height;
        r.mbr_height = static_cast<double>(r.mbr.height) / sig.height;
        sig.regions.regions.push_back(r);
      }
      file.signatures.push_back(std::move(sig));
    }
    return file;
  } catch (const json::exception& e) {
    throw IoError(std::string("signature file schema violation: ") + e.what());
  }
}

void write_signature_file(const fs::path& path, const SignatureFile& file) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write signature file: " + path.string());
  f << signature_file_to_json(file);
}

SignatureFile read_signature_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open signature file: " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return signature_file_from_json(ss.str());
}

}  // namespace dcreid
