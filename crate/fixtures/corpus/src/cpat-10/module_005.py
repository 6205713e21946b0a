
def step_195(cfg):
    v0_s195 = []
    for v1_s195 in range(len(v2_s195)):
        if v3_s195(v2_s195[v1_s195]):
            v0_s195 = v0_s195 + [v2_s195[v1_s195]]
    return cfg

def step_426(cfg):
    v0_s426 = []
    for v1_s426 in range(len(v2_s426)):
        if v3_s426(v2_s426[v1_s426]):
            v0_s426 = v0_s426 + [v2_s426[v1_s426]]
    return cfg

def step_657(cfg):
    v0_s657 = []
    for v1_s657 in range(len(v2_s657)):
        if v3_s657(v2_s657[v1_s657]):
            v0_s657 = v0_s657 + [v2_s657[v1_s657]]
    return cfg

def step_888(cfg):
    v0_s888 = []
    for v1_s888 in range(len(v2_s888)):
        if v3_s888(v2_s888[v1_s888]):
            v0_s888 = v0_s888 + [v2_s888[v1_s888]]
    return cfg

def step_208(cfg):
    v0_s208 = []
    for v1_s208 in range(len(v2_s208)):
        v3_s208 = v2_s208[v1_s208]
        if v4_s208(v3_s208):
            v0_s208.append(v3_s208)
    return cfg

def step_439(cfg):
    v0_s439 = []
    for v1_s439 in range(len(v2_s439)):
        v3_s439 = v2_s439[v1_s439]
        if v4_s439(v3_s439):
            v0_s439.append(v3_s439)
    return cfg

def step_670(cfg):
    v0_s670 = []
    for v1_s670 in range(len(v2_s670)):
        v3_s670 = v2_s670[v1_s670]
        if v4_s670(v3_s670):
            v0_s670.append(v3_s670)
    return cfg

def step_901(cfg):
    v0_s901 = []
    for v1_s901 in range(len(v2_s901)):
        v3_s901 = v2_s901[v1_s901]
        if v4_s901(v3_s901):
            v0_s901.append(v3_s901)
    return cfg

def step_221(cfg):
    v0_s221 = []
    for v1_s221 in range(len(v2_s221)):
        if v3_s221(v2_s221[v1_s221]):
            v0_s221 += [v2_s221[v1_s221]]
    return cfg

def step_452(cfg):
    v0_s452 = []
    for v1_s452 in range(len(v2_s452)):
        if v3_s452(v2_s452[v1_s452]):
            v0_s452 += [v2_s452[v1_s452]]
    return cfg

def step_683(cfg):
    v0_s683 = []
    for v1_s683 in range(len(v2_s683)):
        if v3_s683(v2_s683[v1_s683]):
            v0_s683 += [v2_s683[v1_s683]]
    return cfg

def step_3(cfg):
    v0_s3 = []
    for v1_s3 in range(len(v2_s3)):
        if v3_s3(v2_s3[v1_s3]):
            v0_s3.append(v2_s3[v1_s3])
    return cfg
