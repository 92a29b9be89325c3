#pragma once

#include <chrono>
#include <string>

namespace carhmm {

// Calendar dates are carried as days since the Unix epoch.  Weekly grids are
// Monday-aligned: a week covers [monday, monday + 6].
using Date = std::chrono::sys_days;

// Parses strict ISO "YYYY-MM-DD".  Throws ValidationError on malformed or
// non-existent dates.
Date parse_date(const std::string& s);

std::string format_date(Date d);

bool is_monday(Date d);

int year_of(Date d);

// Index of the week containing `d` on a grid starting at `first_monday`.
// Negative or past-the-end indices are returned as-is; callers range-check.
long long week_index(Date first_monday, Date d);

}  // namespace carhmm
