#include "carhmm/dates.hpp"

#include <cstdio>

#include "carhmm/errors.hpp"

namespace carhmm {

Date parse_date(const std::string& s) {
  int y = 0, m = 0, d = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &tail) != 3 ||
      s.size() != 10) {
    throw ValidationError("malformed date '" + s + "' (expected YYYY-MM-DD)");
  }
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                  std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) {
    throw ValidationError("non-existent calendar date '" + s + "'");
  }
  return std::chrono::sys_days{ymd};
}

std::string format_date(Date d) {
  std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return buf;
}

bool is_monday(Date d) {
  return std::chrono::weekday{d} == std::chrono::Monday;
}

int year_of(Date d) {
  return int(std::chrono::year_month_day{d}.year());
}

long long week_index(Date first_monday, Date d) {
  const long long days = (d - first_monday).count();
  return days >= 0 ? days / 7 : (days - 6) / 7;
}

}  // namespace carhmm
