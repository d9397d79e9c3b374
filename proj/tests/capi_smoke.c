/* Compiles the public header as C and drives the library through it. */

#include <stdio.h>
#include <string.h>

#include "singh/singh.h"

int main(void) {
  static const char doc[] =
      "structure = jeffreys\n"
      "target = bernoulli\n"
      "p = 0.3\n"
      "n = 10\n"
      "m = 2000\n";
  singh_scenario* s = NULL;
  singh_result* r = NULL;
  if (singh_scenario_parse(doc, strlen(doc), &s) != SINGH_OK) {
    fprintf(stderr, "parse: %s\n", singh_last_error());
    return 1;
  }
  if (singh_scenario_evaluate(s, 1, &r) != SINGH_OK) {
    fprintf(stderr, "evaluate: %s\n", singh_last_error());
    return 1;
  }
  const int ok = !singh_result_is_band(r) && singh_result_replicates(r) == 2000 &&
                 singh_result_eval(r, SINGH_CURVE_MAIN, 1.0) == 1.0 &&
                 singh_result_classification(r) == SINGH_OVERCONFIDENT;
  singh_result_free(r);
  singh_scenario_free(s);
  printf("%s\n", ok ? "ok" : "unexpected result");
  return ok ? 0 : 1;
}
