#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcreid/dataset_io.hpp"
#include "dcreid/errors.hpp"
#include "dcreid/evaluation.hpp"
#include "dcreid/matching.hpp"
#include "dcreid/parallel.hpp"
#include "dcreid/quantize_kernel.hpp"
#include "dcreid/signature.hpp"

namespace {

using namespace dcreid;

void add_extraction_flags(CLI::App* cmd, ExtractionParams& params) {
  cmd->add_option("--width", params.norm_width, "Normalization width")->capture_default_str();
  cmd->add_option("--height", params.norm_height, "Normalization height")->capture_default_str();
  cmd->add_option("--tau", params.tau, "Upper/lower split fraction")->capture_default_str();
  cmd->add_option("--max-colors", params.max_colors, "Max dominant colors per part")
      ->capture_default_str();
  cmd->add_option("--connectivity", params.connectivity, "Component connectivity (4 or 8)")
      ->capture_default_str();
  cmd->add_option("--min-area", params.min_area, "Minimum region area in pixels")
      ->capture_default_str();
}

void add_match_flags(CLI::App* cmd, MatchParams& params) {
  cmd->add_option("--alpha", params.alpha, "Histogram cue weight")->capture_default_str();
  cmd->add_option("--beta", params.beta, "MBR y-center vs height weight")->capture_default_str();
  cmd->add_option("--gamma", params.gamma, "Upper part weight")->capture_default_str();
  cmd->add_flag("--same-part-only", params.same_part_only,
                "Restrict region matches to the same body part");
}

int run_scan(const std::string& root, const std::string& out_path) {
  ScanReport report = scan_viper_layout(root);
  for (const auto& f : report.unpaired)
    std::cerr << "warning: no cross-camera partner for " << f << "\n";
  write_manifest(out_path, report.manifest);
  std::cout << "wrote " << report.manifest.entries.size() / 2 << " pairs to " << out_path << "\n";
  return 0;
}

int run_extract(const std::string& manifest_path, const std::string& out_path,
                const ExtractionParams& params, char camera, int jobs) {
  validate(params);
  DatasetManifest manifest = load_manifest(manifest_path);
  std::vector<const ManifestEntry*> selected;
  for (const auto& e : manifest.entries)
    if (camera == 0 || e.camera == camera) selected.push_back(&e);

  std::vector<PersonSignature> signatures(selected.size());
  std::vector<std::string> failures(selected.size());
  parallel_for(selected.size(), jobs, [&](std::size_t i) {
    const ManifestEntry& e = *selected[i];
    try {
      ImageBuffer img = read_ppm_file(e.image_path);
      ForegroundMask mask;
      const ForegroundMask* mask_ptr = nullptr;
      if (!e.mask_path.empty()) {
        std::ifstream f(e.mask_path, std::ios::binary);
        if (!f) throw IoError("cannot open mask file: " + e.mask_path);
        std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                        std::istreambuf_iterator<char>());
        mask = decode_mask_ppm(bytes);
        mask_ptr = &mask;
      }
      signatures[i] = build_signature(img, mask_ptr, e.id, params);
    } catch (const std::exception& ex) {
      failures[i] = e.image_path + std::string(": ") + ex.what();
    }
  });

  SignatureFile file;
  file.params = params;
  int failed = 0;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (!failures[i].empty()) {
      std::cerr << "error: " << failures[i] << "\n";
      ++failed;
    } else {
      file.signatures.push_back(std::move(signatures[i]));
    }
  }
  write_signature_file(out_path, file);
  std::cout << "wrote " << file.signatures.size() << " signatures to " << out_path << " (kernel: "
            << kernel::active_kernel_name() << ")\n";
  if (failed) {
    std::cerr << failed << " image(s) failed\n";
    return 1;
  }
  return 0;
}

const PersonSignature* find_signature(const SignatureFile& file, const std::string& id) {
  for (const auto& sig : file.signatures)
    if (sig.id == id) return &sig;
  return nullptr;
}

int run_match(const std::string& sig_path, const std::string& probe_id,
              const std::string& gallery_id, const MatchParams& params) {
  validate(params);
  SignatureFile file = read_signature_file(sig_path);
  const PersonSignature* probe = find_signature(file, probe_id);
  if (!probe) throw ArgumentError("no signature with id '" + probe_id + "' in " + sig_path);
  const PersonSignature* gallery = find_signature(file, gallery_id);
  if (!gallery) throw ArgumentError("no signature with id '" + gallery_id + "' in " + sig_path);

  const MatchScore score = combined_score(*probe, *gallery, params);
  std::printf("dch        %.6f\n", score.dch);
  std::printf("dcr_dissim %.6f\n", score.dcr_dissim);
  std::printf("combined   %.6f\n", score.combined);
  return 0;
}

std::map<std::string, std::string> load_truth(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open truth file: " + path);
  std::string line;
  if (!std::getline(f, line) || line != "probe_id,gallery_id")
    throw IoError("truth file missing header 'probe_id,gallery_id': " + path);
  std::map<std::string, std::string> truth;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw IoError("malformed truth row: " + line);
    truth[line.substr(0, comma)] = line.substr(comma + 1);
  }
  return truth;
}

int run_evaluate(const std::string& probes_path, const std::string& gallery_path,
                 const std::string& truth_path, const std::string& cmc_out,
                 const std::string& ranks_out, const MatchParams& params, int jobs) {
  validate(params);
  SignatureFile probes = read_signature_file(probes_path);
  SignatureFile gallery = read_signature_file(gallery_path);
  if (params_fingerprint(probes.params) != params_fingerprint(gallery.params))
    throw IncompatibleSignatureError(
        "probe and gallery signature files use different extraction params");

  std::map<std::string, std::string> truth;
  if (!truth_path.empty()) {
    truth = load_truth(truth_path);
  } else {
    for (const auto& sig : probes.signatures) truth[sig.id] = sig.id;
  }

  const EvaluationResult result =
      evaluate_dataset(probes.signatures, gallery.signatures, truth, params, jobs);

  if (!cmc_out.empty()) {
    std::ofstream f(cmc_out, std::ios::binary);
    if (!f) throw IoError("cannot write CMC csv: " + cmc_out);
    write_cmc_csv(f, result.cmc);
  }
  if (!ranks_out.empty()) {
    std::ofstream f(ranks_out, std::ios::binary);
    if (!f) throw IoError("cannot write rank csv: " + ranks_out);
    write_rank_csv(f, result.ranks);
  }

  for (std::size_t k : {std::size_t{1}, std::size_t{5}, std::size_t{10}, std::size_t{20}}) {
    if (k > result.cmc.points.size()) break;
    std::printf("rank-%-2zu %.2f%%\n", k, 100.0 * result.cmc.points[k - 1]);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominant-color person re-identification pipeline"};
  app.require_subcommand(1);

  // scan
  std::string scan_root, scan_out;
  CLI::App* scan = app.add_subcommand("scan", "Build a manifest from a cam_a/cam_b dataset layout");
  scan->add_option("root", scan_root, "Dataset root directory")->required();
  scan->add_option("-o,--output", scan_out, "Manifest CSV to write")->required();

  // extract
  std::string ex_manifest, ex_out;
  std::string ex_camera;
  ExtractionParams ex_params;
  int ex_jobs = 1;
  CLI::App* extract = app.add_subcommand("extract", "Extract signatures for a manifest");
  extract->add_option("manifest", ex_manifest, "Manifest CSV")->required();
  extract->add_option("-o,--output", ex_out, "Signature file to write")->required();
  extract->add_option("--camera", ex_camera, "Restrict to one camera (A or B)")
      ->check(CLI::IsMember({"A", "B"}));
  extract->add_option("--jobs", ex_jobs, "Worker threads")->capture_default_str();
  add_extraction_flags(extract, ex_params);

  // match
  std::string m_sigs, m_probe, m_gallery;
  MatchParams m_params;
  CLI::App* match = app.add_subcommand("match", "Score one probe/gallery signature pair");
  match->add_option("signatures", m_sigs, "Signature file")->required();
  match->add_option("probe", m_probe, "Probe signature id")->required();
  match->add_option("gallery", m_gallery, "Gallery signature id")->required();
  add_match_flags(match, m_params);

  // evaluate
  std::string ev_probes, ev_gallery, ev_truth, ev_cmc, ev_ranks;
  MatchParams ev_params;
  int ev_jobs = 1;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Rank a probe set against a gallery set");
  evaluate->add_option("probes", ev_probes, "Probe signature file")->required();
  evaluate->add_option("gallery", ev_gallery, "Gallery signature file")->required();
  evaluate->add_option("--truth", ev_truth,
                       "Truth CSV (probe_id,gallery_id); default maps each id to itself");
  evaluate->add_option("--cmc-out", ev_cmc, "CMC curve CSV to write");
  evaluate->add_option("--ranks-out", ev_ranks, "Per-probe rank CSV to write");
  evaluate->add_option("--jobs", ev_jobs, "Worker threads")->capture_default_str();
  add_match_flags(evaluate, ev_params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (scan->parsed()) return run_scan(scan_root, scan_out);
    if (extract->parsed())
      return run_extract(ex_manifest, ex_out, ex_params, ex_camera.empty() ? 0 : ex_camera[0],
                         ex_jobs);
    if (match->parsed()) return run_match(m_sigs, m_probe, m_gallery, m_params);
    if (evaluate->parsed())
      return run_evaluate(ev_probes, ev_gallery, ev_truth, ev_cmc, ev_ranks, ev_params, ev_jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
