#include <stdio.h>
#include <string.h>

#include "farey_contact.h"

#define EXPECT(cond)                                                  \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "line %d: %s\n", __LINE__, #cond);        \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    char *s = NULL;
    EXPECT(fc_bypass_attach("2", "4/5", true, &s) == FC_STATUS_OK);
    EXPECT(strcmp(s, "1") == 0);
    fc_string_free(s);

    EXPECT(fc_farey_path("-3", "-5", &s) == FC_STATUS_OK);
    EXPECT(strcmp(s, "-3 -> -4 -> -5") == 0);
    fc_string_free(s);

    int64_t a, b;
    EXPECT(fc_apply_monodromy(1, 2, false, &a, &b) == FC_STATUS_OK);
    EXPECT(a == 4 && b == 3);

    EXPECT(fc_bypass_attach("nope", "1", true, &s) == FC_STATUS_PARSE);
    EXPECT(fc_last_error() != NULL);

    FcVerdict *v = NULL;
    EXPECT(fc_classify_surgery(-3, 0, "1", &v) == FC_STATUS_OK);
    EXPECT(fc_verdict_is_overtwisted(v));
    fc_verdict_free(v);

    FcTrace *t = NULL;
    EXPECT(fc_walkthrough(&t) == FC_STATUS_OK);
    EXPECT(fc_trace_is_sound(t));
    fc_trace_free(t);

    puts("ok");
    return 0;
}
