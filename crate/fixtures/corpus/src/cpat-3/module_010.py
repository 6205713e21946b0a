
def step_60(cfg):
    v0_s60 = []
    for v1_s60 in v2_s60:
        if v1_s60 not in v0_s60 and v1_s60 in v3_s60:
            v0_s60.append(v1_s60)
    return cfg

def step_104(cfg):
    v0_s104 = []
    for v1_s104 in range(len(v2_s104)):
        if v2_s104[v1_s104] in v3_s104 and v2_s104[v1_s104] not in v0_s104:
            v0_s104.append(v2_s104[v1_s104])
    return cfg

def step_3(cfg):
    v0_s3 = []
    for v1_s3 in v2_s3:
        if v1_s3 in v3_s3 and v1_s3 not in v0_s3:
            v0_s3.append(v1_s3)
    return cfg

def step_47(cfg):
    v0_s47 = []
    for v1_s47 in v2_s47:
        if v1_s47 in v3_s47 and v1_s47 not in v0_s47:
            v0_s47 = v0_s47 + [v1_s47]
    return cfg

def step_91(cfg):
    v0_s91 = []
    for v1_s91 in v2_s91:
        if v1_s91 in v3_s91:
            if v1_s91 not in v0_s91:
                v0_s91.append(v1_s91)
    return cfg

def step_135(cfg):
    v0_s135 = []
    for v1_s135 in v2_s135:
        if v1_s135 not in v0_s135 and v1_s135 in v3_s135:
            v0_s135.append(v1_s135)
    return cfg

def step_34(cfg):
    v0_s34 = []
    for v1_s34 in range(len(v2_s34)):
        if v2_s34[v1_s34] in v3_s34 and v2_s34[v1_s34] not in v0_s34:
            v0_s34.append(v2_s34[v1_s34])
    return cfg

def step_78(cfg):
    v0_s78 = []
    for v1_s78 in v2_s78:
        if v1_s78 in v3_s78 and v1_s78 not in v0_s78:
            v0_s78 += [v1_s78]
    return cfg

def step_122(cfg):
    v0_s122 = []
    for v1_s122 in v2_s122:
        if v1_s122 in v3_s122 and v1_s122 not in v0_s122:
            v0_s122 = v0_s122 + [v1_s122]
    return cfg

def step_21(cfg):
    v0_s21 = []
    for v1_s21 in v2_s21:
        if v1_s21 in v3_s21:
            if v1_s21 not in v0_s21:
                v0_s21.append(v1_s21)
    return cfg

def step_65(cfg):
    v0_s65 = []
    for v1_s65 in v2_s65:
        if v1_s65 not in v0_s65 and v1_s65 in v3_s65:
            v0_s65.append(v1_s65)
    return cfg

def step_109(cfg):
    v0_s109 = []
    for v1_s109 in range(len(v2_s109)):
        if v2_s109[v1_s109] in v3_s109 and v2_s109[v1_s109] not in v0_s109:
            v0_s109.append(v2_s109[v1_s109])
    return cfg
