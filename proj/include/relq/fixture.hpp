#pragma once

#include <filesystem>

namespace relq {

// Writes a small five-language demo corpus: kb.jsonl, corpus.<lang>.jsonl,
// vocab.<lang>.txt and a ready-to-run fixture.cfg pointing at the shipped
// data tables. Output is a pure function of the inputs (no clock, no rng),
// so repeated runs are byte-identical.
struct FixtureOptions {
  std::filesystem::path out_dir;
  std::filesystem::path data_dir;  // directory holding templates.tsv etc.
};

void write_fixture(const FixtureOptions& options);

}  // namespace relq
