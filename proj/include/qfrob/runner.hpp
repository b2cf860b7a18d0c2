#pragma once

#include "qfrob/campaign.hpp"
#include "qfrob/report.hpp"

namespace qfrob {

struct RunOptions {
  int jobs = 1;
  bool deterministic = false;  // zero the timing fields
};

// LAMBDA first, then every other check on a pool of `jobs` workers. Records
// come out in task order whatever the scheduling. Errors inside a check turn
// into FAIL records.
VerdictReport run_campaign(const Campaign& c, const RunOptions& opt = {});

}  // namespace qfrob
