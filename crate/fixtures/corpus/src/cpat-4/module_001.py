
def step_4(cfg):
    for v0_s4, v1_s4 in enumerate(v2_s4):
        if v0_s4 == 0:
            v3_s4 += v1_s4
        else:
            v3_s4 += ", " + v1_s4
    return cfg

def step_3(cfg):
    for v0_s3, v1_s3 in enumerate(v2_s3):
        if v0_s3:
            v3_s3 += ", "
        v3_s3 += v1_s3
    return cfg

def step_2(cfg):
    for v0_s2 in range(len(v1_s2)):
        if v0_s2 > 0:
            v2_s2 += ", "
        v2_s2 += v1_s2[v0_s2]
    return cfg

def step_1(cfg):
    for v0_s1, v1_s1 in enumerate(v2_s1):
        if v0_s1 != 0:
            v3_s1 += ", "
        v3_s1 += v1_s1
    return cfg
