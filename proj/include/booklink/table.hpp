#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "booklink/identify.hpp"
#include "booklink/knot_record.hpp"
#include "booklink/spectrum.hpp"
#include "booklink/word.hpp"

namespace booklink {

// Reads the bundled knot table (schema:
// name,crossings,bridge,braid,dt,jones,spectrum,derivation) and enforces the
// per-record invariants.  Exactly 85 rows, 0_1 through 9_49.
std::vector<KnotRecord> load_knot_data(const std::filesystem::path& csv_path);

struct WitnessEntry {
  std::string knot;
  std::filesystem::path file;
  BooklinkWord word;
};

// Loads <knot>.blw for every table row with derivation "witness" and checks
// each is a (1,2)-representative.
std::vector<WitnessEntry> load_witnesses(const std::filesystem::path& dir,
                                         std::span<const KnotRecord> table);

struct WitnessReport {
  std::string knot;
  int bridge = 0;
  int braid = 0;
  bool confirmed = false;
  bool unique_match = false;
  std::vector<std::string> candidates;
};

// Confirms (d,n) = (1,2) and that identification (Jones up to mirror)
// contains the expected knot.  Throws IndexMismatch / IdentityMismatch.
WitnessReport verify_witness(const WitnessEntry& entry,
                             std::span<const KnotRecord> table);

struct TableRow {
  std::string name;
  int bridge = 0;
  int braid = 0;
  Spectrum spectrum = Spectrum::parse("{1,0}");
  std::string derivation;
};

struct TableDocument {
  std::vector<TableRow> rows;
  std::vector<WitnessReport> witness_reports;
};

// Recomputes every spectrum by rule (2-bridge / BB / verified witness) and
// asserts equality with the stored expected spectra.  Throws RowMismatch or
// MissingWitness.
TableDocument regenerate_table(std::span<const KnotRecord> records,
                               std::span<const WitnessEntry> witnesses);

enum class TableFormat { Markdown, Csv };

std::string emit(const TableDocument& doc, TableFormat format);

}  // namespace booklink
