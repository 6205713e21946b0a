
def step_41(cfg):
    v0_s41 = []
    for v1_s41 in v2_s41:
        if v1_s41 in v3_s41:
            if v1_s41 not in v0_s41:
                v0_s41.append(v1_s41)
    return cfg

def step_85(cfg):
    v0_s85 = []
    for v1_s85 in v2_s85:
        if v1_s85 not in v0_s85 and v1_s85 in v3_s85:
            v0_s85.append(v1_s85)
    return cfg

def step_129(cfg):
    v0_s129 = []
    for v1_s129 in range(len(v2_s129)):
        if v2_s129[v1_s129] in v3_s129 and v2_s129[v1_s129] not in v0_s129:
            v0_s129.append(v2_s129[v1_s129])
    return cfg

def step_28(cfg):
    v0_s28 = []
    for v1_s28 in v2_s28:
        if v1_s28 in v3_s28 and v1_s28 not in v0_s28:
            v0_s28 += [v1_s28]
    return cfg

def step_72(cfg):
    v0_s72 = []
    for v1_s72 in v2_s72:
        if v1_s72 in v3_s72 and v1_s72 not in v0_s72:
            v0_s72 = v0_s72 + [v1_s72]
    return cfg

def step_116(cfg):
    v0_s116 = []
    for v1_s116 in v2_s116:
        if v1_s116 in v3_s116:
            if v1_s116 not in v0_s116:
                v0_s116.append(v1_s116)
    return cfg

def step_15(cfg):
    v0_s15 = []
    for v1_s15 in v2_s15:
        if v1_s15 not in v0_s15 and v1_s15 in v3_s15:
            v0_s15.append(v1_s15)
    return cfg

def step_59(cfg):
    v0_s59 = []
    for v1_s59 in range(len(v2_s59)):
        if v2_s59[v1_s59] in v3_s59 and v2_s59[v1_s59] not in v0_s59:
            v0_s59.append(v2_s59[v1_s59])
    return cfg

def step_103(cfg):
    v0_s103 = []
    for v1_s103 in v2_s103:
        if v1_s103 in v3_s103 and v1_s103 not in v0_s103:
            v0_s103 += [v1_s103]
    return cfg

def step_2(cfg):
    v0_s2 = []
    for v1_s2 in v2_s2:
        if v1_s2 in v3_s2 and v1_s2 not in v0_s2:
            v0_s2.append(v1_s2)
    return cfg

def step_46(cfg):
    v0_s46 = []
    for v1_s46 in v2_s46:
        if v1_s46 in v3_s46:
            if v1_s46 not in v0_s46:
                v0_s46.append(v1_s46)
    return cfg

def step_90(cfg):
    v0_s90 = []
    for v1_s90 in v2_s90:
        if v1_s90 not in v0_s90 and v1_s90 in v3_s90:
            v0_s90.append(v1_s90)
    return cfg
