#ifndef WNLIE_VERSION_HPP
#define WNLIE_VERSION_HPP

namespace wnlie {

inline constexpr const char* kArtifactName = "wnlie";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace wnlie

#endif  // WNLIE_VERSION_HPP
