#ifndef POLYCTMC_VERSION_HPP
#define POLYCTMC_VERSION_HPP

namespace polyctmc {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "polyctmc-report/1";

}  // namespace polyctmc

#endif
