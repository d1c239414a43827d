#include <stdio.h>
#include <string.h>

#include "qsc/qsc.h"

int main(void) {
  qsc_design* d = NULL;
  qsc_design_params p;
  qsc_srg_params s;
  if (qsc_design_blokhuis_haemers(4, 1, &d) != QSC_OK) return 1;
  if (qsc_design_verify(d, 2, &p) != QSC_OK || p.v != 64 || p.k != 24 || p.lambda != 46) return 1;
  qsc_design_free(d);
  if (qsc_tw_srg_params(28, 6, 2, 12, 16, &s) != QSC_OK || s.v != 64 || s.mu != 12) return 1;
  if (qsc_design_blokhuis_haemers(3, 1, &d) != QSC_ERR_INVALID_ARGUMENT || strlen(qsc_last_error()) == 0) return 1;
  printf("libqsc %s\n", qsc_version());
  return 0;
}
