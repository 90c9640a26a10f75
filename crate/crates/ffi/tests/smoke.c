#include <stdio.h>
#include <string.h>

#include "extcode.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,  \
              extcode_last_error());                                  \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  ExtcodeField *field = NULL;
  CHECK(extcode_field_new(5, 1, &field) == EXTCODE_STATUS_OK);
  CHECK(extcode_field_order(field) == 5);

  ExtcodeCode *code = NULL;
  const char *json = "{\"grs\": {\"a\": [0, 1, 2, 3], \"k\": 2}}";
  CHECK(extcode_code_from_json(json, field, &code) == EXTCODE_STATUS_OK);
  CHECK(extcode_code_length(code) == 4 && extcode_code_dimension(code) == 2);

  size_t d = 0;
  CHECK(extcode_code_min_distance(code, 1, &d) == EXTCODE_STATUS_BUDGET_EXCEEDED);
  CHECK(strlen(extcode_last_error()) > 0);
  CHECK(extcode_code_min_distance(code, 1000, &d) == EXTCODE_STATUS_OK);
  CHECK(d == 3);

  ExtcodeReport *report = NULL;
  CHECK(extcode_covering_radius(code, 1 << 20, true, &report) == EXTCODE_STATUS_OK);
  CHECK(extcode_report_rho(report) == 2);
  CHECK(extcode_report_num_deep_hole_cosets(report) == 8);
  uint32_t u[4] = {0, 1, 4, 4};
  bool deep = false;
  CHECK(extcode_report_is_deep_hole(report, u, 4, &deep) == EXTCODE_STATUS_OK && deep);

  ExtcodeCode *ext = NULL;
  bool mds = false;
  CHECK(extcode_code_extend(code, u, 4, &ext) == EXTCODE_STATUS_OK);
  CHECK(extcode_code_is_mds(ext, 1000, &mds) == EXTCODE_STATUS_OK && mds);

  char *text = NULL;
  CHECK(extcode_report_to_json(report, false, &text) == EXTCODE_STATUS_OK);
  CHECK(strstr(text, "\"rho\":2") != NULL);
  extcode_string_free(text);

  CHECK(extcode_code_from_json("{", field, &code) == EXTCODE_STATUS_PARSE);

  extcode_code_free(ext);
  extcode_report_free(report);
  extcode_code_free(code);
  extcode_field_free(field);
  puts("ok");
  return 0;
}
