#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cmaxwell/modes.hpp"

namespace cmaxwell {

// Exit codes of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;  // a residual or suite check failed
constexpr int kExitUsage = 2;         // bad flags or invalid/degenerate quantum numbers

struct ProfileRequest {
    std::string space = "s3";
    int m = 0;
    double k = 0;
    int n = -1;                 // required on S3 except for the special/sin2cos branches
    double omega = 0;           // required on H3; 0 means unset
    std::string branch = "auto";  // auto|special|sin2cos|hypergeometric|general|oscillating|exact
    int b_sign = 1;
    int k_sign = 1;
    bool sine = false;
};

// Builds the mode the profile command would emit.
ModeSolution build_profile_mode(const ProfileRequest& req);

struct ProfileTable {
    std::map<std::string, std::string> header;  // key=value metadata
    std::vector<double> r;
    std::vector<cvec3> f;
};

// Reads back a CSV written by the profile command. Throws Error on malformed input.
ProfileTable read_profile_csv(std::istream& in);
// Rebuilds the request from CSV header metadata.
ProfileRequest request_from_header(const std::map<std::string, std::string>& header);

// Parses simple key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(std::istream& in);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cmaxwell
