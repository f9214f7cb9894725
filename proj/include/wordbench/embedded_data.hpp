#pragma once

namespace wb::data {

// Contents of data/certificate.json and data/tables.tsv, embedded at build
// time so the binaries are self-contained.
const char* certificate_json();
const char* tables_tsv();

} // namespace wb::data
