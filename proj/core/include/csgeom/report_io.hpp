// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "csgeom/verify.hpp"

namespace csgeom {

enum class ReportFormat { Json, Csv };

/// Doubles are serialized with 17 significant digits so reports are
/// byte-stable and round-trip exactly.
std::string format_double17(double x);

std::string json_escape(const std::string& s);

/// One JSON object, fixed key order:
/// {check, model, trials, seed, tolerance, max_abs_error, pass, witnesses[]}
std::string to_json(const verify::CheckReport& r);

/// One CSV row matching check_report_csv_header(); witnesses are joined
/// with '|' inside a quoted field.
std::string to_csv_row(const verify::CheckReport& r);
std::string check_report_csv_header();

/// {check:"seven", model, flag, seed, n1..n7, all_equal, method[]}
std::string to_json(const verify::SevenNumbersReport& r);
std::string to_csv_row(const verify::SevenNumbersReport& r);
std::string seven_report_csv_header();

}  // namespace csgeom
